#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcl/catalog.hpp"
#include "pcl/classifier.hpp"
#include "pcl/perfect_code.hpp"

namespace pcl {

struct MethodResult {
  Method method = Method::Criterion3;
  /// nullopt when the method does not apply (theorem without a classifier).
  std::optional<bool> is_code;
  nlohmann::json evidence;
  double timing_us = 0;
};

struct ReportRecord {
  std::string group;
  std::vector<Element> subgroup;
  std::vector<Element> generators;
  std::vector<MethodResult> verdicts;
  /// All present verdicts are equal.
  bool agreement = true;
  /// Set when the only dissent is the closed-form family list for
  /// M2(n2,m2,1) against otherwise unanimous decision procedures.
  std::optional<std::string> finding;
};

/// Name used for the finding above.
inline constexpr const char* kFamilyListFinding = "a1-family-list";

struct EntryReport {
  std::string label;
  std::string spec;
  std::optional<std::string> error;
  bool size_limited = false;
  std::vector<ReportRecord> records;
  std::size_t codes = 0;
  /// Disagreements not explained by a named finding.
  std::size_t disagreements = 0;
  std::size_t findings = 0;
};

struct Report {
  std::vector<EntryReport> entries;
  std::size_t disagreements() const;
  std::size_t findings() const;
  bool any_size_limit() const;
  bool any_error() const;
};

struct MatrixOptions {
  std::vector<Method> methods{Method::Criterion3, Method::Criterion4, Method::TransversalOracle,
                              Method::CayleyDefinition, Method::Theorem};
  /// 0 reads PCL_WORKERS, falling back to the hardware concurrency.
  unsigned workers = 0;
  /// Writes every timing as 0 so repeated runs produce identical bytes.
  bool deterministic = false;
};

nlohmann::json evidence_to_json(const Evidence& evidence);
nlohmann::json outcome_to_json(const ClassificationOutcome& outcome);

/// {group, subgroup, method, is_code, evidence}
nlohmann::json verdict_to_json(const std::string& group, const Subgroup& h, const Verdict& v);

/// Runs `methods` on one subgroup.
ReportRecord evaluate_subgroup(const std::string& label, const Group& g, const ClassifierDispatch& dispatch,
                               const Subgroup& h, const MatrixOptions& options);

nlohmann::json to_json(const ReportRecord& record);

/// Every subgroup of every entry, entries in parallel. Records are written
/// to `out` (one JSON object per line) in catalog order; entries that fail
/// emit a single {"group", "error"} line instead.
Report run_verification_matrix(const std::vector<CatalogEntry>& entries, const MatrixOptions& options,
                               std::ostream* out);

/// group, #subgroups, #codes, disagreements, findings.
std::string render_summary_table(const Report& report);

}  // namespace pcl
