#include "pcl/builders.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string_view>
#include <utility>

#include "pcl/errors.hpp"

namespace pcl {
namespace {

std::size_t checked_power(int base, int exponent, const Limits& limits) {
  std::size_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= static_cast<std::size_t>(base);
    if (value > limits.effective_max_order()) throw SizeLimitExceeded(value, limits.effective_max_order());
  }
  return value;
}

template <typename Mul>
GroupPtr tabulate(std::size_t order, Mul&& mul, std::string label, std::vector<Element> gens,
                  const Limits& limits) {
  limits.check(order);
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) table[x * order + y] = static_cast<Element>(mul(x, y));
  return Group::create(order, std::move(table), std::move(label), std::move(gens), limits);
}

GroupPtr relabel(const GroupPtr& g, std::string label, const Limits& limits) {
  if (g->label() == label) return g;
  auto table = std::vector<Element>(g->table().begin(), g->table().end());
  auto gens = std::vector<Element>(g->generators().begin(), g->generators().end());
  return Group::create(g->order(), std::move(table), std::move(label), std::move(gens), limits);
}

struct AtomBuilder {
  const Limits& limits;

  GroupPtr operator()(const spec::Cyclic& c) const { return cyclic(c.n, limits); }
  GroupPtr operator()(const spec::ElementaryAbelian& e) const {
    return elementary_abelian(e.p, e.k, limits);
  }
  GroupPtr operator()(const spec::Dihedral& d) const { return dihedral(d.order, limits); }
  GroupPtr operator()(const spec::Quaternion&) const { return quaternion8(limits); }
  GroupPtr operator()(const spec::Metacyclic& m) const { return metacyclic_m2(m.n1, m.m1, limits); }
  GroupPtr operator()(const spec::Nonmetacyclic& m) const {
    return nonmetacyclic_m2(m.n2, m.m2, limits);
  }
  GroupPtr operator()(const spec::Semidirect& sd) const {
    const GroupPtr n = build_family(*sd.normal, limits);
    const GroupPtr k = build_family(*sd.acting, limits);
    return semidirect_product(*n, *k, sd.images, limits);
  }
  GroupPtr operator()(const spec::Permutations& p) const {
    int degree = 1;
    for (const auto& gen : p.generators)
      for (const auto& cycle : gen)
        for (int point : cycle) degree = std::max(degree, point);
    std::vector<Permutation> perms;
    for (const auto& gen : p.generators) perms.push_back(permutation_from_cycles(gen, degree));
    return from_permutations(perms, limits);
  }
  GroupPtr operator()(const spec::RawTable& t) const { return from_table(t.rows, limits); }
};

}  // namespace

GroupPtr cyclic(int n, const Limits& limits) {
  if (n < 1) throw ConstraintViolation("C(n) requires n >= 1");
  const auto order = static_cast<std::size_t>(n);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return tabulate(
      order, [order](std::size_t x, std::size_t y) { return (x + y) % order; },
      "C(" + std::to_string(n) + ")", std::move(gens), limits);
}

GroupPtr elementary_abelian(int p, int k, const Limits& limits) {
  validate(GroupSpec{{spec::ElementaryAbelian{p, k}}});
  checked_power(p, k, limits);
  GroupPtr g = cyclic(p, limits);
  const GroupPtr factor = g;
  for (int i = 1; i < k; ++i) g = direct_product(*g, *factor, limits);
  return relabel(g, "EA(" + std::to_string(p) + "," + std::to_string(k) + ")", limits);
}

GroupPtr dihedral(int order, const Limits& limits) {
  validate(GroupSpec{{spec::Dihedral{order}}});
  const auto n = static_cast<std::size_t>(order / 2);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(2);
  gens.push_back(1);
  return tabulate(
      static_cast<std::size_t>(order),
      [n](std::size_t x, std::size_t y) {
        const std::size_t i = x / 2, j = x % 2, k = y / 2, l = y % 2;
        const std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
        return 2 * rot + ((j + l) % 2);
      },
      "D(" + std::to_string(order) + ")", std::move(gens), limits);
}

GroupPtr quaternion8(const Limits& limits) {
  // b a = a^-1 b and b^2 = a^2.
  return tabulate(
      8,
      [](std::size_t x, std::size_t y) {
        const std::size_t i = x / 2, j = x % 2, k = y / 2, l = y % 2;
        std::size_t rot = j ? (i + 4 - k) % 4 : (i + k) % 4;
        if (j && l) rot = (rot + 2) % 4;
        return 2 * rot + ((j + l) % 2);
      },
      "Q8", {2, 1}, limits);
}

GroupPtr metacyclic_m2(int n1, int m1, const Limits& limits) {
  validate(GroupSpec{{spec::Metacyclic{n1, m1}}});
  const std::size_t order = checked_power(2, n1 + m1, limits);
  const std::size_t A = std::size_t{1} << n1;
  const std::size_t B = std::size_t{1} << m1;
  // b^-1 a b = a^r with r = 1 + 2^(n1-1); r^2 = 1 mod 2^n1, so
  // b^j a^k = a^(k r^j) b^j with r^j in {1, r}.
  const std::size_t r = 1 + (A / 2);
  return tabulate(
      order,
      [=](std::size_t x, std::size_t y) {
        const std::size_t i = x / B, j = x % B, k = y / B, l = y % B;
        const std::size_t twisted = (j % 2) ? (k * r) % A : k;
        return ((i + twisted) % A) * B + (j + l) % B;
      },
      "M2(" + std::to_string(n1) + "," + std::to_string(m1) + ")",
      {static_cast<Element>(B), 1}, limits);
}

GroupPtr nonmetacyclic_m2(int n2, int m2, const Limits& limits) {
  if (n2 > m2) std::swap(n2, m2);
  validate(GroupSpec{{spec::Nonmetacyclic{n2, m2}}});
  const std::size_t order = checked_power(2, n2 + m2 + 1, limits);
  const std::size_t A = std::size_t{1} << n2;
  const std::size_t B = std::size_t{1} << m2;
  // c = a^-1 b^-1 a b is central, so b^j a^p = a^p b^j c^(jp).
  return tabulate(
      order,
      [=](std::size_t x, std::size_t y) {
        const std::size_t k = x % 2, s = y % 2;
        const std::size_t i = (x / 2) / B, j = (x / 2) % B;
        const std::size_t p = (y / 2) / B, q = (y / 2) % B;
        return (((i + p) % A) * B + (j + q) % B) * 2 + (k + s + j * p) % 2;
      },
      "M2(" + std::to_string(n2) + "," + std::to_string(m2) + ",1)",
      {static_cast<Element>(2 * B), 2, 1}, limits);
}

GroupPtr direct_product(const Group& a, const Group& b, const Limits& limits) {
  const std::size_t nb = b.order();
  const std::size_t order = a.order() * nb;
  limits.check(order);
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(static_cast<Element>(g * nb));
  for (Element g : b.generators()) gens.push_back(g);
  return tabulate(
      order,
      [&](std::size_t x, std::size_t y) {
        return a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
               b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      },
      a.label() + "x" + b.label(), std::move(gens), limits);
}

GroupPtr semidirect_product(const Group& normal, const Group& acting, std::span<const int> images,
                            const Limits& limits) {
  if (acting.generators().size() != 1)
    throw ConstraintViolation("SD requires a cyclic acting factor with one recorded generator");
  const auto ngens = normal.generators();
  if (images.size() != ngens.size())
    throw ConstraintViolation("SD action needs one image per generator of the normal factor (" +
                              std::to_string(ngens.size()) + ")");
  const std::size_t n = normal.order();
  const std::size_t m = acting.order();
  limits.check(n * m);
  for (int img : images)
    if (img < 0 || static_cast<std::size_t>(img) >= n)
      throw ConstraintViolation("SD action image out of range");

  // Powers of the acting generator give the index order of K.
  const Element k = acting.generators()[0];
  std::vector<Element> k_powers(m);
  std::vector<std::size_t> k_exponent(m, m);
  Element cur = Group::identity();
  for (std::size_t j = 0; j < m; ++j) {
    k_powers[j] = cur;
    k_exponent[cur] = j;
    cur = acting.mul(cur, k);
  }
  if (acting.element_order(k) != m)
    throw ConstraintViolation("SD acting factor is not generated by its recorded generator");

  // Extend the generator images to a map on N by breadth-first words.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, kUnset);
  phi[0] = 0;
  std::vector<Element> queue{Group::identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (std::size_t gi = 0; gi < ngens.size(); ++gi) {
      const Element y = normal.mul(x, ngens[gi]);
      const std::size_t image =
          normal.mul(static_cast<Element>(phi[x]), static_cast<Element>(images[gi]));
      if (phi[y] == kUnset) {
        phi[y] = image;
        queue.push_back(y);
      } else if (phi[y] != image) {
        throw ConstraintViolation("SD action does not extend to a homomorphism");
      }
    }
  }
  if (queue.size() != n)
    throw ConstraintViolation("recorded generators of the SD normal factor do not generate it");
  std::vector<std::uint8_t> hit(n, 0);
  for (auto v : phi) {
    if (hit[v]++) throw ConstraintViolation("SD action is not bijective");
  }

  // phi^j for j < m; phi^m must be the identity map.
  std::vector<std::vector<Element>> phi_pow(m + 1, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) phi_pow[0][x] = static_cast<Element>(x);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t x = 0; x < n; ++x) phi_pow[j][x] = static_cast<Element>(phi[phi_pow[j - 1][x]]);
  if (phi_pow[m] != phi_pow[0])
    throw ConstraintViolation("SD action order does not divide the order of the acting factor");

  std::vector<Element> gens;
  for (Element g : ngens) gens.push_back(static_cast<Element>(g * m));
  gens.push_back(1);

  std::ostringstream label;
  label << "SD(" << normal.label() << ";" << acting.label() << ";";
  for (std::size_t i = 0; i < images.size(); ++i) label << (i ? "," : "") << images[i];
  label << ")";

  // (n1 k^j1)(n2 k^j2) = n1 phi^j1(n2) k^(j1+j2)
  return tabulate(
      n * m,
      [&](std::size_t x, std::size_t y) {
        const std::size_t i1 = x / m, j1 = x % m, i2 = y / m, j2 = y % m;
        const Element nn = normal.mul(static_cast<Element>(i1), phi_pow[j1][i2]);
        return nn * m + (j1 + j2) % m;
      },
      label.str(), std::move(gens), limits);
}

Permutation permutation_from_cycles(const spec::Cycles& cycles, int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint8_t> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ConstraintViolation("cycle point out of range");
      if (used[static_cast<std::size_t>(from)]++)
        throw ConstraintViolation("cycles are not disjoint (point " + std::to_string(from + 1) + ")");
      p[static_cast<std::size_t>(from)] = to;
    }
  }
  return p;
}

GroupPtr from_permutations(std::span<const Permutation> generators, const Limits& limits,
                           std::string label) {
  std::size_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  auto extend = [degree](Permutation p) {
    for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<int>(i));
    return p;
  };
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    Permutation p = extend(g);
    std::vector<std::uint8_t> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)]++)
        throw InvalidGroup("generator is not a bijection of the point set");
    }
    gens.push_back(std::move(p));
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  auto compose = [](const Permutation& x, const Permutation& y) {
    Permutation r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[static_cast<std::size_t>(x[i])];
    return r;
  };

  std::map<Permutation, std::size_t> index;
  std::vector<Permutation> elems{id};
  index.emplace(id, 0);
  const std::size_t bound = limits.effective_max_order();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation y = compose(elems[i], g);
      if (index.count(y)) continue;
      if (elems.size() >= bound) throw SizeLimitExceeded(elems.size() + 1, bound);
      index.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  }

  std::vector<Element> gen_indices;
  for (const auto& g : gens) {
    const auto idx = static_cast<Element>(index.at(g));
    if (idx != 0 && std::find(gen_indices.begin(), gen_indices.end(), idx) == gen_indices.end())
      gen_indices.push_back(idx);
  }
  if (label.empty()) label = "perm[" + std::to_string(elems.size()) + "]";
  return tabulate(
      elems.size(),
      [&](std::size_t x, std::size_t y) { return index.at(compose(elems[x], elems[y])); },
      std::move(label), std::move(gen_indices), limits);
}

GroupPtr from_table(const std::vector<std::vector<int>>& rows, const Limits& limits,
                    std::string label) {
  const std::size_t n = rows.size();
  limits.check(n);
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidGroup("table is not square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidGroup("table entry out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  if (label.empty()) label = "table[" + std::to_string(n) + "]";
  GroupPtr g = Group::create(n, std::move(table), std::move(label), {}, limits);
  if (auto bad = find_associativity_violation(*g))
    throw InvalidGroup("table is not associative at (" + std::to_string(bad->x) + "," +
                       std::to_string(bad->y) + "," + std::to_string(bad->z) + ")");
  return g;
}

GroupPtr build_family(const GroupSpec& spec, const Limits& limits) {
  validate(spec);
  GroupPtr g = std::visit(AtomBuilder{limits}, spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    const GroupPtr next = std::visit(AtomBuilder{limits}, spec.factors[i]);
    g = direct_product(*g, *next, limits);
  }
  return relabel(g, to_string(spec), limits);
}

GroupPtr build_group(std::string_view spec_text, const Limits& limits) {
  return build_family(parse_group_spec(spec_text), limits);
}

}  // namespace pcl
