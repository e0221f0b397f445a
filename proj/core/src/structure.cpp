#include "pcl/structure.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "pcl/errors.hpp"

namespace pcl {
namespace {

int log_base(std::size_t value, int p) {
  int k = 0;
  while (value > 1) {
    value /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

void sort_canonical(std::vector<Subgroup>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
}

// Distinct cyclic subgroups <x> for x in h, keyed by first generator found.
std::vector<Subgroup> cyclic_subgroups(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  h.members().for_each([&](Element x) {
    if (x == Group::identity()) return;
    const Element gen[] = {x};
    Subgroup c = subgroup_generated(g, gen);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  });
  return out;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), k);
}

bool is_p_group(const Subgroup& h) { return prime_power(h.order()).has_value(); }

bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  bool cyclic = false;
  h.members().for_each([&](Element x) {
    if (h.parent().element_order(x) == h.order()) cyclic = true;
  });
  return cyclic;
}

Subgroup subgroup_from_members(const Group& g, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet closure(g.order());
  closure.insert(Group::identity());
  std::vector<Element> elems{Group::identity()};
  members.for_each([&](Element x) {
    if (closure.contains(x)) return;
    gens.push_back(x);
    // Rebuild the closure with the enlarged generator list.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Element s : gens) {
        const Element y = g.mul(elems[i], s);
        if (!closure.contains(y)) {
          closure.insert(y);
          elems.push_back(y);
        }
      }
    }
  });
  if (!(closure == members)) throw PreconditionError("member set is not a subgroup");
  return Subgroup(g.ptr(), members, std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(g.mul(x, y)); }); });
  return out;
}

std::vector<Subgroup> all_subgroups(const Subgroup& ambient) {
  const Group& g = ambient.parent();
  std::vector<Subgroup> cyclics = cyclic_subgroups(ambient);
  std::vector<Subgroup> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  Subgroup trivial = trivial_subgroup(g);
  seen.insert(trivial.members());
  found.push_back(std::move(trivial));
  for (const auto& c : cyclics)
    if (seen.insert(c.members()).second) found.push_back(c);

  // Worklist of subgroups whose joins with every cyclic subgroup are pending.
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (const auto& c : cyclics) {
      if (c.is_subgroup_of(found[i])) continue;
      Subgroup joined = join(found[i], c.generators());
      if (seen.insert(joined.members()).second) found.push_back(std::move(joined));
    }
  }
  sort_canonical(found);
  return found;
}

std::vector<Subgroup> all_subgroups(const Group& g) { return all_subgroups(whole_group(g)); }

std::vector<Subgroup> maximal_subgroups(const Subgroup& h) {
  std::vector<Subgroup> proper;
  for (auto& k : all_subgroups(h))
    if (k.order() < h.order()) proper.push_back(std::move(k));
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j)
      if (proper[j].order() > proper[i].order() && proper[i].is_subgroup_of(proper[j]))
        maximal = false;
    if (maximal) out.push_back(proper[i]);
  }
  return out;
}

Subgroup frattini(const Subgroup& h) {
  if (h.is_trivial()) return h;
  ElementSet common = h.members();
  for (const auto& m : maximal_subgroups(h)) common &= m.members();
  return subgroup_from_members(h.parent(), common);
}

Subgroup frattini(const Group& g) { return frattini(whole_group(g)); }

Subgroup derived_subgroup(const Subgroup& h) {
  const Group& g = h.parent();
  ElementSet comms(g.order());
  const auto elems = h.elements();
  for (Element x : elems)
    for (Element y : elems) comms.insert(g.commutator(x, y));
  comms.erase(Group::identity());
  const auto gens = comms.to_vector();
  Subgroup closure = subgroup_generated(g, gens);
  return subgroup_from_members(g, closure.members());
}

Subgroup derived_subgroup(const Group& g) { return derived_subgroup(whole_group(g)); }

Subgroup center(const Subgroup& h) {
  const Group& g = h.parent();
  ElementSet z(g.order());
  h.members().for_each([&](Element x) {
    for (Element s : h.generators())
      if (g.mul(x, s) != g.mul(s, x)) return;
    z.insert(x);
  });
  return subgroup_from_members(g, z);
}

Subgroup center(const Group& g) { return center(whole_group(g)); }

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h) {
  const Group& g = ambient.parent();
  ElementSet n(g.order());
  ambient.members().for_each([&](Element x) {
    for (Element s : h.generators())
      if (!h.contains(g.conjugate(s, x))) return;
    n.insert(x);
  });
  return subgroup_from_members(g, n);
}

Subgroup normalizer(const Group& g, const Subgroup& h) { return normalizer(whole_group(g), h); }

Subgroup centralizer(const Subgroup& ambient, const ElementSet& s) {
  const Group& g = ambient.parent();
  const auto targets = s.to_vector();
  ElementSet c(g.order());
  ambient.members().for_each([&](Element x) {
    for (Element t : targets)
      if (g.mul(x, t) != g.mul(t, x)) return;
    c.insert(x);
  });
  return subgroup_from_members(g, c);
}

Subgroup centralizer(const Group& g, const ElementSet& s) { return centralizer(whole_group(g), s); }

bool is_normal(const Subgroup& ambient, const Subgroup& h) {
  return normalizer(ambient, h).order() == ambient.order();
}

Subgroup power_subgroup(const Subgroup& h, int p) {
  const Group& g = h.parent();
  ElementSet powers(g.order());
  h.members().for_each([&](Element x) { powers.insert(g.pow(x, p)); });
  powers.erase(Group::identity());
  const auto gens = powers.to_vector();
  return subgroup_from_members(g, subgroup_generated(g, gens).members());
}

namespace {

std::size_t sylow_order(std::size_t n, int p) {
  std::size_t q = 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    q *= static_cast<std::size_t>(p);
  }
  return q;
}

void require_prime(int p) {
  const auto pp = prime_power(static_cast<std::size_t>(p));
  if (p < 2 || !pp || pp->second != 1) throw PreconditionError(std::to_string(p) + " is not prime");
}

}  // namespace

std::vector<Subgroup> all_sylow(const Subgroup& ambient, int p) {
  require_prime(p);
  const std::size_t target = sylow_order(ambient.order(), p);
  if (target == ambient.order()) return {ambient};
  std::vector<Subgroup> out;
  for (auto& k : all_subgroups(ambient))
    if (k.order() == target) out.push_back(std::move(k));
  return out;
}

Subgroup sylow(const Subgroup& ambient, int p) {
  require_prime(p);
  const std::size_t target = sylow_order(ambient.order(), p);
  if (target == 1) return trivial_subgroup(ambient.parent());
  if (target == ambient.order()) return ambient;
  return all_sylow(ambient, p).front();
}

Subgroup sylow(const Group& g, int p) { return sylow(whole_group(g), p); }

Subgroup sylow_containing(const Subgroup& ambient, int p, const Subgroup& q) {
  require_prime(p);
  if (!q.is_subgroup_of(ambient)) throw PreconditionError("subgroup is not contained in the ambient group");
  if (!q.is_trivial()) {
    const auto pp = prime_power(q.order());
    if (!pp || pp->first != p) throw PreconditionError("subgroup is not a " + std::to_string(p) + "-group");
  }
  const std::size_t target = sylow_order(ambient.order(), p);
  if (target == ambient.order()) return ambient;
  if (q.order() == target) return q;
  for (auto& k : all_sylow(ambient, p))
    if (q.is_subgroup_of(k)) return std::move(k);
  throw Error("no Sylow subgroup contains the given p-subgroup");  // unreachable by Sylow's theorem
}

Subgroup sylow_containing(const Group& g, int p, const Subgroup& q) {
  return sylow_containing(whole_group(g), p, q);
}

ElementSet involutions(const Subgroup& h) {
  const Group& g = h.parent();
  ElementSet out(g.order());
  h.members().for_each([&](Element x) {
    if (g.mul(x, x) == Group::identity()) out.insert(x);
  });
  return out;
}

ElementSet involutions(const Group& g) { return involutions(whole_group(g)); }

Subgroup omega1(const Subgroup& h) {
  const Group& g = h.parent();
  auto inv = involutions(h);
  inv.erase(Group::identity());
  const auto gens = inv.to_vector();
  return subgroup_from_members(g, subgroup_generated(g, gens).members());
}

Subgroup omega1(const Group& g) { return omega1(whole_group(g)); }

ElementSet squares_set(const Subgroup& h) {
  const Group& g = h.parent();
  ElementSet out(g.order());
  h.members().for_each([&](Element y) { out.insert(g.mul(y, y)); });
  return out;
}

ElementSet squares_set(const Group& g) { return squares_set(whole_group(g)); }

bool is_square(const Group& g, Element x) {
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(static_cast<Element>(y), static_cast<Element>(y)) == x) return true;
  return false;
}

int min_generators_by_search(const Subgroup& h) {
  if (h.is_trivial()) return 0;
  const auto cyclics = cyclic_subgroups(h);
  std::vector<Subgroup> level;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& c : cyclics)
    if (seen.insert(c.members()).second) level.push_back(c);
  for (int k = 1;; ++k) {
    for (const auto& s : level)
      if (s.order() == h.order()) return k;
    std::vector<Subgroup> next;
    std::unordered_set<ElementSet, ElementSetHash> next_seen;
    for (const auto& s : level)
      for (const auto& c : cyclics) {
        if (c.is_subgroup_of(s)) continue;
        Subgroup joined = join(s, c.generators());
        if (next_seen.insert(joined.members()).second) next.push_back(std::move(joined));
      }
    level = std::move(next);
  }
}

int min_generators(const Subgroup& h) {
  if (h.is_trivial()) return 0;
  if (const auto pp = prime_power(h.order())) {
    const Subgroup phi = frattini(h);
    return log_base(h.order() / phi.order(), pp->first);
  }
  return min_generators_by_search(h);
}

bool is_minimal_nonabelian(const Subgroup& h) {
  if (is_abelian(h)) return false;
  for (const auto& m : maximal_subgroups(h))
    if (!is_abelian(m)) return false;
  return true;
}

bool is_minimal_nonabelian(const Group& g) { return is_minimal_nonabelian(whole_group(g)); }

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Abelian: return "Abelian";
    case FamilyTag::Q8: return "Q8";
    case FamilyTag::Metacyclic: return "Metacyclic";
    case FamilyTag::Nonmetacyclic: return "Nonmetacyclic";
    case FamilyTag::NotA1OrA0: return "NotA1OrA0";
  }
  return "?";
}

namespace {

bool generates(const Group& g, Element a, Element b) {
  const Element gens[] = {a, b};
  return subgroup_generated(g, gens).order() == g.order();
}

bool relations_hold(const Group& g, const FamilyRecognition& r) {
  switch (r.tag) {
    case FamilyTag::Q8:
      return g.element_order(r.a) == 4 && g.element_order(r.b) == 4 &&
             g.mul(r.a, r.a) == g.mul(r.b, r.b) && g.conjugate(r.a, r.b) == g.inv(r.a);
    case FamilyTag::Metacyclic:
      return g.element_order(r.a) == (1u << r.n) && g.element_order(r.b) == (1u << r.m) &&
             g.conjugate(r.a, r.b) == g.pow(r.a, 1 + (1LL << (r.n - 1)));
    case FamilyTag::Nonmetacyclic: {
      if (g.element_order(r.a) != (1u << r.n) || g.element_order(r.b) != (1u << r.m)) return false;
      const Element c = g.commutator(r.a, r.b);
      return c == r.c && g.element_order(c) == 2 && g.mul(r.a, c) == g.mul(c, r.a) &&
             g.mul(r.b, c) == g.mul(c, r.b);
    }
    default:
      return false;
  }
}

// First ordered pair (a, b) with the prescribed orders satisfying the
// relations of `candidate` and generating g.
std::optional<FamilyRecognition> find_witness(const Group& g, FamilyRecognition candidate,
                                              std::uint32_t order_a, std::uint32_t order_b) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.element_order(static_cast<Element>(a)) != order_a) continue;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (g.element_order(static_cast<Element>(b)) != order_b) continue;
      candidate.a = static_cast<Element>(a);
      candidate.b = static_cast<Element>(b);
      candidate.c = g.commutator(candidate.a, candidate.b);
      if (relations_hold(g, candidate) && generates(g, candidate.a, candidate.b)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_recognition(const Group& g, const FamilyRecognition& rec) {
  if (rec.tag == FamilyTag::Abelian) return g.is_abelian();
  if (rec.tag == FamilyTag::NotA1OrA0) return false;
  if (!relations_hold(g, rec) || !generates(g, rec.a, rec.b)) return false;
  const int exponent = rec.tag == FamilyTag::Q8           ? 3
                       : rec.tag == FamilyTag::Metacyclic ? rec.n + rec.m
                                                          : rec.n + rec.m + 1;
  return g.order() == (std::size_t{1} << exponent);
}

FamilyRecognition recognize_a1_family(const Group& g) {
  const auto pp = prime_power(g.order());
  if (g.order() != 1 && (!pp || pp->first != 2))
    throw PreconditionError("family recognition needs a 2-group, got order " + std::to_string(g.order()));
  FamilyRecognition rec;
  if (g.is_abelian()) {
    rec.tag = FamilyTag::Abelian;
    return rec;
  }
  if (!is_minimal_nonabelian(g)) return rec;

  const int log_order = pp->second;
  if (g.order() == 8) {
    const auto inv = involutions(g).count() - 1;
    FamilyRecognition candidate;
    if (inv == 1) {
      candidate.tag = FamilyTag::Q8;
      if (auto w = find_witness(g, candidate, 4, 4)) return *w;
    } else {
      candidate.tag = FamilyTag::Metacyclic;
      candidate.n = 2;
      candidate.m = 1;
      if (auto w = find_witness(g, candidate, 4, 2)) return *w;
    }
    throw Error("order-8 minimal nonabelian group without a presentation witness");
  }

  // G/G' has rank 2; its exponent and order give the type (2^x, 2^y), x <= y.
  const Subgroup derived = derived_subgroup(g);
  std::uint32_t quotient_exponent = 1;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::uint32_t k = 1;
    Element y = static_cast<Element>(x);
    while (!derived.contains(y)) {
      y = g.mul(y, static_cast<Element>(x));
      ++k;
    }
    quotient_exponent = std::max(quotient_exponent, k);
  }
  const int y_exp = std::countr_zero(quotient_exponent);
  const int x_exp = log_base(g.order() / derived.order(), 2) - y_exp;
  const std::size_t omega = omega1(g).order();

  std::vector<FamilyRecognition> candidates;
  if (omega == 8) {
    FamilyRecognition c;
    c.tag = FamilyTag::Nonmetacyclic;
    c.n = x_exp;
    c.m = y_exp;
    candidates.push_back(c);
  } else {
    // Metacyclic type is (2^(n1-1), 2^m1) in some order.
    for (auto [n1, m1] : {std::pair{x_exp + 1, y_exp}, std::pair{y_exp + 1, x_exp}}) {
      if (n1 < 2 || m1 < 1 || n1 + m1 != log_order) continue;
      FamilyRecognition c;
      c.tag = FamilyTag::Metacyclic;
      c.n = n1;
      c.m = m1;
      const bool dup = std::any_of(candidates.begin(), candidates.end(),
                                   [&](const auto& o) { return o.n == n1 && o.m == m1; });
      if (!dup) candidates.push_back(c);
    }
  }
  for (const auto& c : candidates)
    if (auto w = find_witness(g, c, 1u << c.n, 1u << c.m)) return *w;
  throw Error("minimal nonabelian 2-group of order " + std::to_string(g.order()) +
              " matched no family presentation");
}

std::optional<DihedralWitness> recognize_dihedral(const Group& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  const std::size_t n = g.order() / 2;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.element_order(static_cast<Element>(a)) != n) continue;
    const Element gen[] = {static_cast<Element>(a)};
    const Subgroup rot = subgroup_generated(g, gen);
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto eb = static_cast<Element>(b);
      if (rot.contains(eb) || g.mul(eb, eb) != Group::identity()) continue;
      if (g.conjugate(static_cast<Element>(a), eb) == g.inv(static_cast<Element>(a)))
        return DihedralWitness{static_cast<Element>(a), eb};
    }
  }
  return std::nullopt;
}

}  // namespace pcl
