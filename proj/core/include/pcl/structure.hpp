#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcl/group.hpp"
#include "pcl/subgroup.hpp"

namespace pcl {

// Structural invariants. Every operation takes an "ambient" subgroup so the
// same code serves whole groups and their subgroups; overloads taking a
// Group use the whole group as ambient.

/// (p, k) when n = p^k with k >= 1.
std::optional<std::pair<int, int>> prime_power(std::size_t n);
bool is_p_group(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_cyclic(const Subgroup& h);

/// Subgroup with the given member set; generators are chosen greedily in
/// ascending index order. The member set must already be a subgroup.
Subgroup subgroup_from_members(const Group& g, const ElementSet& members);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// {ab : a in A, b in B}
ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b);

/// Every subgroup of `ambient` exactly once, sorted canonically.
/// Seeds with all cyclic subgroups and joins with cyclic subgroups until
/// no new member set appears.
std::vector<Subgroup> all_subgroups(const Subgroup& ambient);
std::vector<Subgroup> all_subgroups(const Group& g);

/// Maximal proper subgroups of `h`, canonical order. Empty for trivial h.
std::vector<Subgroup> maximal_subgroups(const Subgroup& h);

/// Intersection of the maximal subgroups; the trivial group maps to itself.
Subgroup frattini(const Subgroup& h);
Subgroup frattini(const Group& g);

Subgroup derived_subgroup(const Subgroup& h);
Subgroup derived_subgroup(const Group& g);
Subgroup center(const Subgroup& h);
Subgroup center(const Group& g);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup centralizer(const Subgroup& ambient, const ElementSet& s);
Subgroup centralizer(const Group& g, const ElementSet& s);
bool is_normal(const Subgroup& ambient, const Subgroup& h);

/// <x^p : x in h>
Subgroup power_subgroup(const Subgroup& h, int p);

/// Canonically first Sylow p-subgroup (p need not divide |ambient|).
Subgroup sylow(const Subgroup& ambient, int p);
Subgroup sylow(const Group& g, int p);
std::vector<Subgroup> all_sylow(const Subgroup& ambient, int p);
/// Canonically first Sylow p-subgroup of `ambient` containing `q`.
/// Throws PreconditionError if q is not a p-subgroup of ambient.
Subgroup sylow_containing(const Subgroup& ambient, int p, const Subgroup& q);
Subgroup sylow_containing(const Group& g, int p, const Subgroup& q);

/// {x in h : x^2 = 1}; the identity is included.
ElementSet involutions(const Subgroup& h);
ElementSet involutions(const Group& g);
Subgroup omega1(const Subgroup& h);
Subgroup omega1(const Group& g);
/// {y^2 : y in h}
ElementSet squares_set(const Subgroup& h);
ElementSet squares_set(const Group& g);
bool is_square(const Group& g, Element x);

/// d(h). Uses log_p |h / frattini(h)| for p-groups, the join search otherwise.
int min_generators(const Subgroup& h);
/// Smallest k such that h is a join of k cyclic subgroups.
int min_generators_by_search(const Subgroup& h);

/// Nonabelian with every maximal subgroup abelian.
bool is_minimal_nonabelian(const Subgroup& h);
bool is_minimal_nonabelian(const Group& g);

enum class FamilyTag { Abelian, Q8, Metacyclic, Nonmetacyclic, NotA1OrA0 };

std::string to_string(FamilyTag tag);

/// Identification of a 2-group against the minimal nonabelian families.
/// For Metacyclic the parameters are (n1, m1); for Nonmetacyclic (n2, m2)
/// with n2 <= m2. The witness satisfies the defining relations:
///   Q8:            o(a)=o(b)=4, a^2=b^2, b^-1 a b = a^-1
///   Metacyclic:    o(a)=2^n1, o(b)=2^m1, b^-1 a b = a^(1+2^(n1-1))
///   Nonmetacyclic: o(a)=2^n2, o(b)=2^m2, c=[a,b], o(c)=2, c central
/// and generates the group.
struct FamilyRecognition {
  FamilyTag tag = FamilyTag::NotA1OrA0;
  int n = 0;
  int m = 0;
  Element a = 0;
  Element b = 0;
  Element c = 0;
};

/// Throws PreconditionError unless g is a 2-group.
FamilyRecognition recognize_a1_family(const Group& g);

/// Re-checks every defining relation of the tagged presentation.
bool verify_recognition(const Group& g, const FamilyRecognition& rec);

struct DihedralWitness {
  /// Rotation of order |G|/2.
  Element a = 0;
  /// Involution outside <a> with b^-1 a b = a^-1.
  Element b = 0;
};

/// First lexicographic witness if g is dihedral of order 2n (n >= 1).
std::optional<DihedralWitness> recognize_dihedral(const Group& g);

}  // namespace pcl
