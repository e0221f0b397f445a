#pragma once

#include <span>
#include <vector>

#include "pcl/element_set.hpp"
#include "pcl/group.hpp"

namespace pcl {

/// A subgroup of a fixed parent group: membership mask plus the generator
/// list it was built from. Construct through `subgroup_generated`,
/// `whole_group` or `trivial_subgroup`; the constructor itself only checks
/// that the mask belongs to the parent.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators);

  const Group& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::span<const Element> generators() const { return generators_; }
  std::size_t order() const { return order_; }
  bool contains(Element x) const { return members_.contains(x); }
  std::vector<Element> elements() const { return members_.to_vector(); }

  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }

  /// Equality of member sets (parents compared by identity).
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Element> generators_;
  std::size_t order_ = 0;
};

/// Canonical order: by order, then by ascending element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);

/// Smallest subgroup containing `gens` (breadth-first closure).
Subgroup subgroup_generated(const Group& g, std::span<const Element> gens);
/// Join of an existing subgroup with extra elements.
Subgroup join(const Subgroup& h, std::span<const Element> extra);

/// A subgroup re-expressed as a group in its own right.
struct InducedGroup {
  GroupPtr group;
  /// embedding[i] is the parent element represented by index i.
  std::vector<Element> embedding;
  /// Maps a subgroup of the parent contained in the source to a subgroup
  /// of `group`.
  Subgroup restrict(const Subgroup& k) const;
  /// Maps a subgroup of `group` back into the parent.
  Subgroup lift(const Subgroup& k, const GroupPtr& parent) const;
  std::vector<int> index_of;
};

/// Elements are numbered in ascending parent-index order (identity first).
InducedGroup induced_group(const Subgroup& h);

}  // namespace pcl
