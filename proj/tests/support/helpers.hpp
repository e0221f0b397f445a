#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "pcl/builders.hpp"
#include "pcl/subgroup.hpp"

namespace pcl::testing {

inline GroupPtr make(std::string_view spec) { return build_group(spec); }

inline Subgroup gen(const Group& g, std::initializer_list<Element> gens) {
  const std::vector<Element> v(gens);
  return subgroup_generated(g, v);
}

// Element indices in the documented enumeration of each family.
inline Element dihedral_elem(int n, int i, int j) {
  return static_cast<Element>(2 * (((i % n) + n) % n) + j);
}
inline Element metacyclic_elem(int n1, int m1, long i, long j) {
  const long A = 1L << n1, B = 1L << m1;
  return static_cast<Element>(((i % A + A) % A) * B + ((j % B + B) % B));
}
inline Element nonmetacyclic_elem(int n2, int m2, long i, long j, int k) {
  const long A = 1L << n2, B = 1L << m2;
  return static_cast<Element>((((i % A + A) % A) * B + ((j % B + B) % B)) * 2 + (k & 1));
}

}  // namespace pcl::testing
