#include "pcl/subgroup.hpp"

#include <algorithm>

#include "pcl/errors.hpp"

namespace pcl {

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  if (!parent_) throw PreconditionError("subgroup needs a parent group");
  if (members_.universe() != parent_->order())
    throw PreconditionError("membership mask does not match the parent order");
  if (!members_.contains(Group::identity()))
    throw PreconditionError("subgroup must contain the identity");
  order_ = members_.count();
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return canonical_less(a.members(), b.members());
}

Subgroup whole_group(const Group& g) {
  return Subgroup(g.ptr(), g.all_elements(),
                  std::vector<Element>(g.generators().begin(), g.generators().end()));
}

Subgroup trivial_subgroup(const Group& g) {
  ElementSet s(g.order());
  s.insert(Group::identity());
  return Subgroup(g.ptr(), std::move(s), {});
}

namespace {

// Closure of `elems` (already closed under the old generators) under right
// multiplication by every generator.
void close(const Group& g, std::vector<Element>& elems, ElementSet& members,
           std::span<const Element> gens) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        elems.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup subgroup_generated(const Group& g, std::span<const Element> gens) {
  for (Element x : gens)
    if (x >= g.order()) throw PreconditionError("generator index out of range");
  ElementSet members(g.order());
  members.insert(Group::identity());
  std::vector<Element> elems{Group::identity()};
  close(g, elems, members, gens);
  return Subgroup(g.ptr(), std::move(members), std::vector<Element>(gens.begin(), gens.end()));
}

Subgroup join(const Subgroup& h, std::span<const Element> extra) {
  const Group& g = h.parent();
  std::vector<Element> gens(h.generators().begin(), h.generators().end());
  bool grows = false;
  for (Element x : extra) {
    if (!h.contains(x)) grows = true;
    gens.push_back(x);
  }
  if (!grows) return h;
  ElementSet members = h.members();
  std::vector<Element> elems = members.to_vector();
  close(g, elems, members, gens);
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

Subgroup InducedGroup::restrict(const Subgroup& k) const {
  ElementSet members(group->order());
  k.members().for_each([&](Element x) {
    const int idx = index_of[x];
    if (idx < 0) throw PreconditionError("subgroup is not contained in the induced group");
    members.insert(static_cast<Element>(idx));
  });
  std::vector<Element> gens;
  for (Element x : k.generators()) gens.push_back(static_cast<Element>(index_of[x]));
  return Subgroup(group, std::move(members), std::move(gens));
}

Subgroup InducedGroup::lift(const Subgroup& k, const GroupPtr& parent) const {
  ElementSet members(parent->order());
  k.members().for_each([&](Element x) { members.insert(embedding[x]); });
  std::vector<Element> gens;
  for (Element x : k.generators()) gens.push_back(embedding[x]);
  return Subgroup(parent, std::move(members), std::move(gens));
}

InducedGroup induced_group(const Subgroup& h) {
  const Group& g = h.parent();
  InducedGroup out;
  out.embedding = h.elements();
  out.index_of.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.embedding.size(); ++i)
    out.index_of[out.embedding[i]] = static_cast<int>(i);
  const std::size_t n = out.embedding.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] =
          static_cast<Element>(out.index_of[g.mul(out.embedding[i], out.embedding[j])]);
  std::vector<Element> gens;
  for (Element x : h.generators())
    if (x != Group::identity()) gens.push_back(static_cast<Element>(out.index_of[x]));
  Limits limits;
  limits.max_order = Limits::kHardMaxOrder;
  out.group = Group::create(n, std::move(table), g.label() + "|" + std::to_string(n), std::move(gens),
                            limits);
  return out;
}

}  // namespace pcl
