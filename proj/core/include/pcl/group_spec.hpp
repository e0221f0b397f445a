#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pcl {

struct GroupSpec;

namespace spec {

struct Cyclic {
  int n;
};
struct ElementaryAbelian {
  int p;
  int k;
};
/// Dihedral group of the given (even) order.
struct Dihedral {
  int order;
};
struct Quaternion {};
/// a^(2^n1) = b^(2^m1) = 1, b^-1 a b = a^(1 + 2^(n1-1)), n1 >= 2, m1 >= 1.
struct Metacyclic {
  int n1;
  int m1;
};
/// a^(2^n2) = b^(2^m2) = c^2 = 1, [a,b] = c central; stored with n2 <= m2.
struct Nonmetacyclic {
  int n2;
  int m2;
};
/// normal ⋊ acting, where the single generator of `acting` sends the i-th
/// recorded generator of `normal` to element index images[i] of `normal`.
struct Semidirect {
  std::shared_ptr<const GroupSpec> normal;
  std::shared_ptr<const GroupSpec> acting;
  std::vector<int> images;
};
/// One permutation in cycle notation over points 1..degree.
using Cycles = std::vector<std::vector<int>>;
struct Permutations {
  std::vector<Cycles> generators;
};
/// Row i, column j holds the index of the product i*j.
struct RawTable {
  std::vector<std::vector<int>> rows;
};

using Atom = std::variant<Cyclic, ElementaryAbelian, Dihedral, Quaternion, Metacyclic,
                          Nonmetacyclic, Semidirect, Permutations, RawTable>;

}  // namespace spec

/// A direct product of atoms, in the order written.
struct GroupSpec {
  std::vector<spec::Atom> factors;
};

/// Parses the group-description language:
///
///   spec  := atom { "x" atom }
///   atom  := "C(" int ")" | "EA(" prime "," int ")" | "D(" int ")"
///          | "Q8" | "M2(" int "," int ")" | "M2(" int "," int ",1)"
///          | "SD(" spec ";" spec ";" action ")" | "perm:" cycles { "," cycles }
///   action := int { "," int }
///   cycles := "(" int { "," int } ")" { "(" ... ")" }
///
/// Whitespace is ignored. Throws SyntaxError (with offset) or
/// ConstraintViolation.
GroupSpec parse_group_spec(std::string_view text);

/// Parses a raw multiplication-table file body (whitespace separated rows).
GroupSpec parse_table_text(std::string_view text);

/// Throws ConstraintViolation naming the first violated family constraint.
void validate(const GroupSpec& spec);

/// Canonical text; parse_group_spec(to_string(s)) reproduces s.
std::string to_string(const GroupSpec& spec);

}  // namespace pcl
