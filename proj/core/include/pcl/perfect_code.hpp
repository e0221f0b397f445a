#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcl/group.hpp"
#include "pcl/subgroup.hpp"

namespace pcl {

/// One representative per right coset Hx, closed under inversion as a set.
struct Transversal {
  GroupPtr parent;
  Subgroup subgroup;
  std::vector<Element> reps;
};

/// Checks partition and inverse-closure; returns a reason when invalid.
std::optional<std::string> check_transversal(const Transversal& t);

/// Inverse-closed subset of G \ {1}.
struct ConnectionSet {
  GroupPtr parent;
  ElementSet members;
};

enum class Method { Criterion3, Criterion4, TransversalOracle, CayleyDefinition, Theorem };

std::string to_string(Method m);
std::optional<Method> method_from_string(std::string_view name);

/// An x whose coset Hx violates the criterion.
struct ViolatingCoset {
  Element x;
};
struct NoTransversal {};
struct TheoremClause {
  std::string clause;
};

using Evidence =
    std::variant<std::monostate, Transversal, ConnectionSet, ViolatingCoset, NoTransversal, TheoremClause>;

struct Verdict {
  bool is_code = false;
  Method method = Method::Criterion3;
  Evidence evidence;
};

/// True iff for every x with x^2 in H and |H|/|H ∩ H^x| odd, the coset Hx
/// contains some y with y^2 = 1 (the identity counts).
Verdict criterion3(const Group& g, const Subgroup& h);

/// Same conclusion, quantified over every x in G with HxH = Hx^-1H.
Verdict criterion4(const Group& g, const Subgroup& h);

/// Exact backtracking search for an inverse-closed right transversal.
std::optional<Transversal> find_inverse_closed_transversal(const Group& g, const Subgroup& h);

Verdict transversal_oracle(const Group& g, const Subgroup& h);

/// Replaces the representative of H itself by the identity and drops it.
/// Throws PreconditionError for a malformed transversal.
ConnectionSet connection_set_from_transversal(const Group& g, const Subgroup& h, const Transversal& t);

/// For every g, exactly one c in C has g = c or g c^-1 in S.
/// Throws PreconditionError unless S is inverse-closed and identity-free.
bool verify_perfect_code_in_cayley(const Group& g, const ConnectionSet& s, const Subgroup& c);

/// Builds S from an inverse-closed transversal when one exists and checks
/// the definition directly.
Verdict cayley_definition(const Group& g, const Subgroup& h);

struct ZhangReduction {
  /// Sylow 2-subgroup of H.
  Subgroup q;
  /// Sylow 2-subgroup of N_G(Q) containing Q.
  Subgroup p;
};

/// H is a subgroup perfect code of G iff Q is one of P.
ZhangReduction zhang_reduce(const Group& g, const Subgroup& h);

/// Decides "Q is a subgroup perfect code of P" with criterion3 on P viewed
/// as a group in its own right.
bool reduced_is_code(const ZhangReduction& r);

/// No element of order 4.
bool is_code_perfect(const Group& g);

}  // namespace pcl
