#pragma once

#include <optional>
#include <string>

#include "pcl/group.hpp"
#include "pcl/structure.hpp"
#include "pcl/subgroup.hpp"

namespace pcl {

// Closed-form deciders for subgroup perfect codes in abelian 2-groups,
// minimal nonabelian 2-groups, dihedral groups and groups with an abelian
// Sylow 2-subgroup. Each one is checked against criterion3 in the tests.

/// Shapes of the noncyclic non-normal and normal code families in
/// M2(n2,m2,1) = <a, b | a^(2^n2) = b^(2^m2) = c^2 = 1, [a,b] = c central>.
enum class FamilyShape {
  // n2 = 1
  A_Cs_B2,             // <a c^s, b^2>
  A_B2j_Cs_B2kr_C,     // <a b^(2j) c^s, b^(2^k r) c>
  A_Bt_C,              // <a b^t, c>
  // n2 >= 2
  Ad_Cs_B2,            // <a^d c^s, b^2>
  Ad_B2j_Cs_B2kr_C,    // <a^d b^(2j) c^s, b^(2^k r) c>
  At_Bd_Cs_A2,         // <a^t b^d c^s, a^2>
  At_Bd_Cs_A2lr_C,     // <a^t b^d c^s, a^(2^l r) c>
  Ad_Bt_C,             // <a^d b^t, c>
  // both lists
  At_Bd_C,             // <a^t b^d, c>
};

std::string to_string(FamilyShape shape);

/// Parameter assignment for a matched shape; unused parameters stay 0.
struct FamilyMatch {
  FamilyShape shape;
  int t = 0, j = 0, d = 0, r = 0, k = 0, l = 0, s = 0;
};

struct ClassificationOutcome {
  bool is_code = false;
  /// Names the rule that decided the verdict, e.g. "abelian-2group/frattini".
  std::string clause;
  std::optional<FamilyMatch> match;
};

/// G abelian 2-group: H in {1, G} or H ∩ Φ(G) <= Φ(H).
ClassificationOutcome classify_abelian_2group(const Group& g, const Subgroup& h);
/// Same, with Φ(G) precomputed.
ClassificationOutcome classify_abelian_2group(const Group& g, const Subgroup& frattini_g,
                                              const Subgroup& h);

/// G minimal nonabelian 2-group (Q8, M2(n1,m1) or M2(n2,m2,1)).
ClassificationOutcome classify_a1_2group(const Group& g, const Subgroup& h);
/// Same, with the recognition precomputed.
ClassificationOutcome classify_a1_2group(const Group& g, const FamilyRecognition& rec,
                                         const Subgroup& h);

/// Searches the family table for (n2 = 1) or (n2 >= 2) over exponent
/// residues; returns the first assignment whose generated subgroup equals H.
/// Throws PreconditionError for cyclic H, H = G, or a non-Nonmetacyclic
/// recognition.
std::optional<FamilyMatch> match_theorem_family(const Group& g, const FamilyRecognition& rec,
                                                const Subgroup& h);

/// G dihedral of order 2n with rotation a of order n.
ClassificationOutcome dihedral_classify(const Group& g, const DihedralWitness& w, const Subgroup& h);

/// G with a nontrivial abelian Sylow 2-subgroup: Q ∩ Φ(P) <= Φ(Q) for
/// Q in Syl2(H), P in Syl2(G) with Q <= P.
ClassificationOutcome classify_abelian_sylow2(const Group& g, const Subgroup& h);

/// Which closed-form classifier applies to a group, if any.
enum class ClassifierKind { Abelian2Group, A1TwoGroup, Dihedral, AbelianSylow2, CodePerfect, None };

std::string to_string(ClassifierKind kind);

/// Preference order: abelian 2-group, minimal nonabelian 2-group, dihedral,
/// abelian Sylow 2-subgroup, code-perfect (no element of order 4).
struct ClassifierDispatch {
  ClassifierKind kind = ClassifierKind::None;
  FamilyRecognition recognition;
  std::optional<DihedralWitness> dihedral;
  std::optional<Subgroup> frattini_of_group;
};

ClassifierDispatch select_classifier(const Group& g);

/// Runs the selected classifier; nullopt when none applies.
std::optional<ClassificationOutcome> classify(const Group& g, const ClassifierDispatch& dispatch,
                                              const Subgroup& h);

}  // namespace pcl
