#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcl/group.hpp"
#include "pcl/group_spec.hpp"

namespace pcl {

// Element enumeration used by every constructor:
//
//   C(n)             index i <-> g^i
//   D(2n)            index 2i + j <-> a^i b^j          (a rotation, b reflection)
//   Q8               index 2i + j <-> a^i b^j          (i < 4, j < 2)
//   M2(n1,m1)        index i*2^m1 + j <-> a^i b^j
//   M2(n2,m2,1)      index (i*2^m2 + j)*2 + k <-> a^i b^j c^k
//   A x B            index i*|B| + j <-> (a_i, b_j)
//   N ⋊ K            index i*|K| + j <-> n_i k^j
//   permutations     breadth-first discovery order from the identity
//
// Recorded generators are a; a,b; or a,b,c for the presentation families, so
// recognition witnesses can be addressed by construction.

GroupPtr cyclic(int n, const Limits& limits = {});
GroupPtr elementary_abelian(int p, int k, const Limits& limits = {});
/// Dihedral group of order `order` (= 2n), a^n = b^2 = (ab)^2 = 1.
GroupPtr dihedral(int order, const Limits& limits = {});
GroupPtr quaternion8(const Limits& limits = {});
GroupPtr metacyclic_m2(int n1, int m1, const Limits& limits = {});
/// Parameters are swapped when n2 > m2.
GroupPtr nonmetacyclic_m2(int n2, int m2, const Limits& limits = {});

GroupPtr direct_product(const Group& a, const Group& b, const Limits& limits = {});

/// `acting` must be cyclic (exactly one recorded generator). `images[i]` is
/// the image of normal.generators()[i] under that generator; the map must
/// extend to an automorphism whose order divides |acting|.
GroupPtr semidirect_product(const Group& normal, const Group& acting,
                            std::span<const int> images, const Limits& limits = {});

/// A permutation as the image list of points 0..degree-1.
using Permutation = std::vector<int>;

/// Closure of `generators` under composition. The product x*y applies x
/// first, then y. Element 0 is the identity permutation.
GroupPtr from_permutations(std::span<const Permutation> generators, const Limits& limits = {},
                           std::string label = {});

/// Converts 1-based cycle notation to an image list on `degree` points.
Permutation permutation_from_cycles(const spec::Cycles& cycles, int degree);

/// Validates a raw table, including associativity.
GroupPtr from_table(const std::vector<std::vector<int>>& rows, const Limits& limits = {},
                    std::string label = {});

/// Builds the group described by a parsed spec.
GroupPtr build_family(const GroupSpec& spec, const Limits& limits = {});

/// Parses and builds in one step.
GroupPtr build_group(std::string_view spec_text, const Limits& limits = {});

}  // namespace pcl
