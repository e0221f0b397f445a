#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcl/element_set.hpp"

namespace pcl {

/// Order bound applied by every constructor.
struct Limits {
  static constexpr std::size_t kDefaultMaxOrder = 512;
  /// Elements are 16-bit indices and tables are dense, so the bound is
  /// clamped to this value whatever the caller asks for.
  static constexpr std::size_t kHardMaxOrder = 8192;

  std::size_t max_order = kDefaultMaxOrder;

  /// Reads PCL_MAX_ORDER; falls back to the default when unset or invalid.
  static Limits from_env();
  std::size_t effective_max_order() const;
  void check(std::size_t order) const;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group as a dense multiplication table over element indices.
/// Element 0 is always the identity. Instances are immutable and are only
/// created through `Group::create` (directly or via the builders), so they
/// can be shared freely across threads.
class Group : public std::enable_shared_from_this<Group> {
 public:
  /// Validates the table (identity at index 0, Latin square) and derives
  /// inverses and element orders. Associativity is not checked here; see
  /// `find_associativity_violation`.
  static GroupPtr create(std::size_t order, std::vector<Element> table,
                         std::string label, std::vector<Element> generators,
                         const Limits& limits = {});

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  const std::string& label() const { return label_; }

  /// Generators recorded by the constructor (presentation witnesses for the
  /// family constructors, point generators for permutation groups). Always
  /// generates the whole group.
  std::span<const Element> generators() const { return generators_; }

  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  /// x^k for any integer k (negative powers use the inverse).
  Element pow(Element x, long long k) const;
  /// x^-1 y^-1 x y
  Element commutator(Element x, Element y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  /// y^-1 x y
  Element conjugate(Element x, Element y) const { return mul(mul(inv(y), x), y); }

  std::uint32_t element_order(Element x) const { return orders_[x]; }
  bool is_abelian() const { return abelian_; }

  std::span<const Element> table() const { return table_; }
  ElementSet all_elements() const;
  ElementSet empty_set() const { return ElementSet(order_); }

  GroupPtr ptr() const { return shared_from_this(); }

 private:
  Group() = default;
  // Appends elements (ascending) until the recorded generators generate.
  void complete_generators();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::string label_;
  bool abelian_ = false;
};

struct AssociativityViolation {
  Element x, y, z;
};

/// Exhaustive over all triples when |G| <= exhaustive_limit, otherwise
/// `samples` random triples from a seeded generator.
std::optional<AssociativityViolation> find_associativity_violation(
    const Group& g, std::size_t exhaustive_limit = 64,
    std::size_t samples = 100000, std::uint64_t seed = 0x5eed);

/// Computes the element order of `x` by repeated multiplication.
std::uint32_t element_order(const Group& g, Element x);

}  // namespace pcl
