#include "pcl/perfect_code.hpp"

#include <algorithm>
#include <numeric>

#include "pcl/errors.hpp"
#include "pcl/structure.hpp"

namespace pcl {

std::string to_string(Method m) {
  switch (m) {
    case Method::Criterion3: return "criterion3";
    case Method::Criterion4: return "criterion4";
    case Method::TransversalOracle: return "oracle";
    case Method::CayleyDefinition: return "cayley";
    case Method::Theorem: return "theorem";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view name) {
  for (Method m : {Method::Criterion3, Method::Criterion4, Method::TransversalOracle,
                   Method::CayleyDefinition, Method::Theorem})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

namespace {

void require_same_parent(const Group& g, const Subgroup& h) {
  if (&h.parent() != &g) throw PreconditionError("subgroup belongs to a different group");
}

// |H| / |H ∩ H^x| is odd.
bool odd_conjugate_index(const Group& g, const std::vector<Element>& h_elems, const Subgroup& h,
                         Element x) {
  const Element x_inv = g.inv(x);
  std::size_t common = 0;
  for (Element k : h_elems)
    if (h.contains(g.mul(g.mul(x, k), x_inv))) ++common;
  return ((h_elems.size() / common) % 2) == 1;
}

bool coset_has_square_root_of_one(const Group& g, const std::vector<Element>& h_elems, Element x) {
  for (Element k : h_elems) {
    const Element y = g.mul(k, x);
    if (g.mul(y, y) == Group::identity()) return true;
  }
  return false;
}

template <typename Condition>
Verdict coset_criterion(const Group& g, const Subgroup& h, Method method, Condition&& selects) {
  require_same_parent(g, h);
  const auto h_elems = h.elements();
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    if (!selects(x, h_elems)) continue;
    if (!odd_conjugate_index(g, h_elems, h, x)) continue;
    if (!coset_has_square_root_of_one(g, h_elems, x)) return Verdict{false, method, ViolatingCoset{x}};
  }
  return Verdict{true, method, {}};
}

}  // namespace

Verdict criterion3(const Group& g, const Subgroup& h) {
  return coset_criterion(g, h, Method::Criterion3, [&](Element x, const std::vector<Element>&) {
    return h.contains(g.mul(x, x));
  });
}

Verdict criterion4(const Group& g, const Subgroup& h) {
  // x^-1 in HxH  <=>  some k in H has x^-1 k^-1 x^-1 in H.
  return coset_criterion(g, h, Method::Criterion4, [&](Element x, const std::vector<Element>& h_elems) {
    const Element x_inv = g.inv(x);
    for (Element k : h_elems)
      if (h.contains(g.mul(g.mul(x_inv, g.inv(k)), x_inv))) return true;
    return false;
  });
}

std::optional<std::string> check_transversal(const Transversal& t) {
  const Group& g = *t.parent;
  const Subgroup& h = t.subgroup;
  if (&h.parent() != &g) return "subgroup belongs to a different group";
  if (t.reps.size() * h.order() != g.order()) return "wrong number of representatives";
  ElementSet covered(g.order());
  ElementSet reps(g.order());
  for (Element r : t.reps) {
    if (r >= g.order()) return "representative out of range";
    reps.insert(r);
    for (Element k : h.elements()) {
      const Element y = g.mul(k, r);
      if (covered.contains(y)) return "two representatives share a coset";
      covered.insert(y);
    }
  }
  for (Element r : t.reps)
    if (!reps.contains(g.inv(r))) return "not closed under inversion";
  return std::nullopt;
}

namespace {

// Exact search over coset representatives. Choosing t for coset C forces
// t^-1 for the coset containing t^-1; a coset containing both t and t^-1
// (t != t^-1) can only use elements with t^2 = 1.
class TransversalSearch {
 public:
  TransversalSearch(const Group& g, const Subgroup& h) : g_(g) {
    const std::size_t n = g.order();
    coset_of_.assign(n, kNone);
    const auto h_elems = h.elements();
    for (std::size_t x = 0; x < n; ++x) {
      if (coset_of_[x] != kNone) continue;
      const std::size_t id = coset_count_++;
      for (Element k : h_elems) coset_of_[g.mul(k, static_cast<Element>(x))] = id;
    }
    candidates_.resize(coset_count_);
    for (std::size_t t = 0; t < n; ++t) {
      const auto te = static_cast<Element>(t);
      const std::size_t own = coset_of_[t];
      const std::size_t partner = coset_of_[g.inv(te)];
      if (g.inv(te) == te || partner != own) candidates_[own].push_back(te);
    }
    assigned_.assign(coset_count_, kNone);
  }

  std::optional<std::vector<Element>> solve() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;

    // Cosets linked by an inverse pair belong to one component; components
    // are solved independently.
    std::vector<std::size_t> parent(coset_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t c = 0; c < coset_count_; ++c)
      for (Element t : candidates_[c]) {
        const std::size_t a = find(c), b = find(coset_of_[g_.inv(t)]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::vector<std::size_t>> components(coset_count_);
    for (std::size_t c = 0; c < coset_count_; ++c) components[find(c)].push_back(c);

    for (const auto& comp : components) {
      if (comp.empty()) continue;
      if (!search(comp)) return std::nullopt;
    }
    std::vector<Element> reps;
    reps.reserve(coset_count_);
    for (std::size_t c = 0; c < coset_count_; ++c) reps.push_back(static_cast<Element>(assigned_[c]));
    return reps;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool viable(Element t) const {
    const Element ti = g_.inv(t);
    if (ti == t) return true;
    return assigned_[coset_of_[ti]] == kNone;
  }

  bool search(const std::vector<std::size_t>& comp) {
    // Most constrained unassigned coset first.
    std::size_t best = kNone, best_count = kNone;
    for (std::size_t c : comp) {
      if (assigned_[c] != kNone) continue;
      std::size_t count = 0;
      for (Element t : candidates_[c])
        if (viable(t)) ++count;
      if (count < best_count) {
        best = c;
        best_count = count;
        if (count == 0) return false;
      }
    }
    if (best == kNone) return true;

    for (Element t : candidates_[best]) {
      if (!viable(t)) continue;
      const Element ti = g_.inv(t);
      const std::size_t partner = coset_of_[ti];
      assigned_[best] = t;
      if (ti != t) assigned_[partner] = ti;
      if (search(comp)) return true;
      assigned_[best] = kNone;
      if (ti != t) assigned_[partner] = kNone;
    }
    return false;
  }

  const Group& g_;
  std::vector<std::size_t> coset_of_;
  std::size_t coset_count_ = 0;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::size_t> assigned_;
};

}  // namespace

std::optional<Transversal> find_inverse_closed_transversal(const Group& g, const Subgroup& h) {
  require_same_parent(g, h);
  auto reps = TransversalSearch(g, h).solve();
  if (!reps) return std::nullopt;
  return Transversal{g.ptr(), h, std::move(*reps)};
}

Verdict transversal_oracle(const Group& g, const Subgroup& h) {
  if (auto t = find_inverse_closed_transversal(g, h))
    return Verdict{true, Method::TransversalOracle, std::move(*t)};
  return Verdict{false, Method::TransversalOracle, NoTransversal{}};
}

ConnectionSet connection_set_from_transversal(const Group& g, const Subgroup& h, const Transversal& t) {
  require_same_parent(g, h);
  if (!(t.subgroup == h)) throw PreconditionError("transversal belongs to a different subgroup");
  if (auto why = check_transversal(t)) throw PreconditionError("malformed transversal: " + *why);
  // The representative lying in H is its own inverse (it is the only
  // representative in H), so swapping it for the identity keeps the set
  // inverse-closed and still a transversal.
  ConnectionSet s{g.ptr(), ElementSet(g.order())};
  for (Element r : t.reps)
    if (!h.contains(r)) s.members.insert(r);
  return s;
}

bool verify_perfect_code_in_cayley(const Group& g, const ConnectionSet& s, const Subgroup& c) {
  require_same_parent(g, c);
  if (s.members.universe() != g.order()) throw PreconditionError("connection set has the wrong universe");
  if (s.members.contains(Group::identity())) throw PreconditionError("connection set contains the identity");
  bool closed = true;
  s.members.for_each([&](Element x) {
    if (!s.members.contains(g.inv(x))) closed = false;
  });
  if (!closed) throw PreconditionError("connection set is not inverse-closed");

  const auto code = c.elements();
  for (std::size_t gi = 0; gi < g.order(); ++gi) {
    const auto x = static_cast<Element>(gi);
    int hits = 0;
    for (Element k : code)
      if (x == k || s.members.contains(g.mul(x, g.inv(k)))) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

Verdict cayley_definition(const Group& g, const Subgroup& h) {
  auto t = find_inverse_closed_transversal(g, h);
  if (!t) return Verdict{false, Method::CayleyDefinition, NoTransversal{}};
  ConnectionSet s = connection_set_from_transversal(g, h, *t);
  const bool ok = verify_perfect_code_in_cayley(g, s, h);
  return Verdict{ok, Method::CayleyDefinition, std::move(s)};
}

ZhangReduction zhang_reduce(const Group& g, const Subgroup& h) {
  require_same_parent(g, h);
  Subgroup q = sylow(h, 2);
  Subgroup n = normalizer(g, q);
  Subgroup p = sylow_containing(n, 2, q);
  return ZhangReduction{std::move(q), std::move(p)};
}

bool reduced_is_code(const ZhangReduction& r) {
  const InducedGroup induced = induced_group(r.p);
  const Subgroup q = induced.restrict(r.q);
  return criterion3(*induced.group, q).is_code;
}

bool is_code_perfect(const Group& g) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Element>(x)) == 4) return false;
  return true;
}

}  // namespace pcl
