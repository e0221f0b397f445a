#include "pcl/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "pcl/errors.hpp"

namespace pcl {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("PCL_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) limits.max_order = static_cast<std::size_t>(v);
  }
  return limits;
}

std::size_t Limits::effective_max_order() const {
  return std::min(max_order, kHardMaxOrder);
}

void Limits::check(std::size_t order) const {
  if (order > effective_max_order()) throw SizeLimitExceeded(order, effective_max_order());
}

GroupPtr Group::create(std::size_t order, std::vector<Element> table, std::string label,
                       std::vector<Element> generators, const Limits& limits) {
  if (order == 0) throw InvalidGroup("a group must have at least one element");
  limits.check(order);
  if (table.size() != order * order)
    throw InvalidGroup("multiplication table has " + std::to_string(table.size()) +
                       " entries, expected " + std::to_string(order * order));

  for (std::size_t i = 0; i < order; ++i) {
    if (table[i] != i || table[i * order] != i)
      throw InvalidGroup("element 0 is not the identity (row/column " + std::to_string(i) + ")");
  }

  std::vector<std::uint8_t> seen(order);
  for (std::size_t r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order; ++c) {
      const Element v = table[r * order + c];
      if (v >= order || seen[v]++)
        throw InvalidGroup("row " + std::to_string(r) + " is not a permutation");
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order; ++r)
      if (seen[table[r * order + c]]++)
        throw InvalidGroup("column " + std::to_string(c) + " is not a permutation");
  }

  for (auto gen : generators)
    if (gen >= order) throw InvalidGroup("generator index out of range");

  std::shared_ptr<Group> g(new Group());
  g->order_ = order;
  g->table_ = std::move(table);
  g->label_ = std::move(label);
  g->generators_ = std::move(generators);

  g->inverse_.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      if (g->table_[x * order + y] == 0) {
        g->inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
  }

  g->orders_.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    g->orders_[x] = pcl::element_order(*g, static_cast<Element>(x));

  g->complete_generators();

  g->abelian_ = true;
  for (std::size_t x = 0; x < order && g->abelian_; ++x)
    for (std::size_t y = x + 1; y < order; ++y)
      if (g->table_[x * order + y] != g->table_[y * order + x]) {
        g->abelian_ = false;
        break;
      }
  return g;
}

void Group::complete_generators() {
  std::vector<std::uint8_t> member(order_, 0);
  std::vector<Element> elems{identity()};
  member[0] = 1;
  std::size_t done = 0;
  auto close = [&] {
    // Restart so earlier elements also meet the newest generator.
    std::fill(member.begin(), member.end(), 0);
    elems.assign(1, identity());
    member[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Element s : generators_) {
        const Element y = mul(elems[i], s);
        if (!member[y]) {
          member[y] = 1;
          elems.push_back(y);
        }
      }
    done = elems.size();
  };
  close();
  for (std::size_t x = 0; x < order_ && done < order_; ++x) {
    if (member[x]) continue;
    generators_.push_back(static_cast<Element>(x));
    close();
  }
}

Element Group::pow(Element x, long long k) const {
  const long long n = orders_[x];
  long long e = k % n;
  if (e < 0) e += n;
  Element result = identity();
  Element base = x;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ElementSet Group::all_elements() const {
  ElementSet s(order_);
  for (std::size_t i = 0; i < order_; ++i) s.insert(static_cast<Element>(i));
  return s;
}

std::uint32_t element_order(const Group& g, Element x) {
  std::uint32_t k = 1;
  Element y = x;
  while (y != Group::identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

std::optional<AssociativityViolation> find_associativity_violation(
    const Group& g, std::size_t exhaustive_limit, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.order();
  auto check = [&](Element x, Element y, Element z) {
    return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
  };
  if (n <= exhaustive_limit) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!check(static_cast<Element>(x), static_cast<Element>(y), static_cast<Element>(z)))
            return AssociativityViolation{static_cast<Element>(x), static_cast<Element>(y),
                                          static_cast<Element>(z)};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = static_cast<Element>(pick(rng));
    const auto y = static_cast<Element>(pick(rng));
    const auto z = static_cast<Element>(pick(rng));
    if (!check(x, y, z)) return AssociativityViolation{x, y, z};
  }
  return std::nullopt;
}

}  // namespace pcl
