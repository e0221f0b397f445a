#include "pcl/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "pcl/errors.hpp"
#include "pcl/structure.hpp"

namespace pcl {

std::size_t Report::disagreements() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.disagreements;
  return n;
}

std::size_t Report::findings() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.findings;
  return n;
}

bool Report::any_size_limit() const {
  return std::any_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.size_limited; });
}

bool Report::any_error() const {
  return std::any_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.error.has_value(); });
}

nlohmann::json evidence_to_json(const Evidence& evidence) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const Transversal& t) const { return {{"transversal", t.reps}}; }
    nlohmann::json operator()(const ConnectionSet& s) const { return {{"connection_set", s.members.to_vector()}}; }
    nlohmann::json operator()(const ViolatingCoset& v) const { return {{"violating_coset", v.x}}; }
    nlohmann::json operator()(const NoTransversal&) const { return {{"no_transversal", true}}; }
    nlohmann::json operator()(const TheoremClause& c) const { return {{"clause", c.clause}}; }
  };
  return std::visit(Visitor{}, evidence);
}

nlohmann::json outcome_to_json(const ClassificationOutcome& outcome) {
  nlohmann::json j{{"clause", outcome.clause}};
  if (outcome.match) {
    const FamilyMatch& m = *outcome.match;
    j["family"] = to_string(m.shape);
    j["params"] = {{"t", m.t}, {"j", m.j}, {"d", m.d}, {"r", m.r}, {"k", m.k}, {"l", m.l}, {"s", m.s}};
  }
  return j;
}

nlohmann::json verdict_to_json(const std::string& group, const Subgroup& h, const Verdict& v) {
  return {{"group", group},
          {"subgroup", h.elements()},
          {"method", to_string(v.method)},
          {"is_code", v.is_code},
          {"evidence", evidence_to_json(v.evidence)}};
}

namespace {

Verdict run_method(Method m, const Group& g, const Subgroup& h) {
  switch (m) {
    case Method::Criterion3: return criterion3(g, h);
    case Method::Criterion4: return criterion4(g, h);
    case Method::TransversalOracle: return transversal_oracle(g, h);
    case Method::CayleyDefinition: return cayley_definition(g, h);
    case Method::Theorem: break;
  }
  throw PreconditionError("theorem method is dispatched separately");
}

// The theorem verdict alone dissents, and it came from the M2(n2,m2,1)
// family list.
std::optional<std::string> classify_dissent(const ReportRecord& rec) {
  std::optional<bool> others;
  const MethodResult* theorem = nullptr;
  for (const auto& r : rec.verdicts) {
    if (!r.is_code) continue;
    if (r.method == Method::Theorem) {
      theorem = &r;
      continue;
    }
    if (others && *others != *r.is_code) return std::nullopt;
    others = r.is_code;
  }
  if (!theorem || !others) return std::nullopt;
  const std::string clause = theorem->evidence.value("clause", std::string{});
  if (clause == "a1/family-match" || clause == "a1/no-family-match") return std::string(kFamilyListFinding);
  return std::nullopt;
}

}  // namespace

ReportRecord evaluate_subgroup(const std::string& label, const Group& g, const ClassifierDispatch& dispatch,
                               const Subgroup& h, const MatrixOptions& options) {
  ReportRecord rec;
  rec.group = label;
  rec.subgroup = h.elements();
  rec.generators.assign(h.generators().begin(), h.generators().end());
  std::optional<bool> first;
  for (Method m : options.methods) {
    MethodResult r;
    r.method = m;
    const auto start = std::chrono::steady_clock::now();
    if (m == Method::Theorem) {
      if (auto outcome = classify(g, dispatch, h)) {
        r.is_code = outcome->is_code;
        r.evidence = outcome_to_json(*outcome);
        r.evidence["classifier"] = to_string(dispatch.kind);
      } else {
        r.evidence = {{"clause", "not-applicable"}};
      }
    } else {
      Verdict v = run_method(m, g, h);
      r.is_code = v.is_code;
      r.evidence = evidence_to_json(v.evidence);
    }
    const auto stop = std::chrono::steady_clock::now();
    r.timing_us = options.deterministic ? 0.0 : std::chrono::duration<double, std::micro>(stop - start).count();
    if (r.is_code) {
      if (!first) first = r.is_code;
      else if (*first != *r.is_code) rec.agreement = false;
    }
    rec.verdicts.push_back(std::move(r));
  }
  if (!rec.agreement) rec.finding = classify_dissent(rec);
  return rec;
}

nlohmann::json to_json(const ReportRecord& record) {
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& r : record.verdicts) {
    nlohmann::json v{{"evidence", r.evidence}, {"timing_us", r.timing_us}};
    v["is_code"] = r.is_code ? nlohmann::json(*r.is_code) : nlohmann::json(nullptr);
    verdicts[to_string(r.method)] = std::move(v);
  }
  return {{"group", record.group},
          {"subgroup", {{"elements", record.subgroup}, {"order", record.subgroup.size()}, {"generators", record.generators}}},
          {"verdicts", std::move(verdicts)},
          {"agreement", record.agreement},
          {"finding", record.finding ? nlohmann::json(*record.finding) : nlohmann::json(nullptr)}};
}

namespace {

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* raw = std::getenv("PCL_WORKERS")) {
    const int v = std::atoi(raw);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EntryReport process_entry(const CatalogEntry& entry, const MatrixOptions& options) {
  EntryReport rep;
  rep.label = entry.label;
  rep.spec = entry.spec;
  rep.error = entry.error;
  rep.size_limited = entry.size_limited;
  if (!entry.group) return rep;
  try {
    const Group& g = *entry.group;
    const bool want_theorem =
        std::find(options.methods.begin(), options.methods.end(), Method::Theorem) != options.methods.end();
    const ClassifierDispatch dispatch = want_theorem ? select_classifier(g) : ClassifierDispatch{};
    for (const Subgroup& h : all_subgroups(g)) {
      ReportRecord rec = evaluate_subgroup(entry.label, g, dispatch, h, options);
      if (rec.finding) ++rep.findings;
      else if (!rec.agreement) ++rep.disagreements;
      for (const auto& r : rec.verdicts)
        if (r.is_code) {
          if (*r.is_code) ++rep.codes;
          break;
        }
      rep.records.push_back(std::move(rec));
    }
  } catch (const SizeLimitExceeded& ex) {
    rep.error = ex.what();
    rep.size_limited = true;
    rep.records.clear();
  } catch (const Error& ex) {
    rep.error = ex.what();
    rep.records.clear();
  }
  return rep;
}

void emit(const EntryReport& rep, std::ostream& out) {
  if (rep.error) {
    out << nlohmann::json{{"group", rep.label}, {"spec", rep.spec}, {"error", *rep.error}}.dump() << '\n';
    return;
  }
  for (const auto& rec : rep.records) out << to_json(rec).dump() << '\n';
}

}  // namespace

Report run_verification_matrix(const std::vector<CatalogEntry>& entries, const MatrixOptions& options,
                               std::ostream* out) {
  Report report;
  report.entries.resize(entries.size());
  std::vector<char> done(entries.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  const unsigned workers = std::min<std::size_t>(worker_count(options.workers), std::max<std::size_t>(1, entries.size()));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) {
        EntryReport rep = process_entry(entries[i], options);
        std::lock_guard lock(mu);
        report.entries[i] = std::move(rep);
        done[i] = 1;
        cv.notify_all();
      }
    });

  // Emit in catalog order as soon as each prefix is complete.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i] != 0; });
    lock.unlock();
    if (out) {
      emit(report.entries[i], *out);
      out->flush();
    }
  }
  return report;
}

std::string render_summary_table(const Report& report) {
  std::size_t width = 5;
  for (const auto& e : report.entries) width = std::max(width, e.label.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "group" << "  " << std::right << std::setw(10)
     << "subgroups" << "  " << std::setw(6) << "codes" << "  " << std::setw(13) << "disagreements" << "  " << std::setw(8) << "findings" << '\n';
  std::size_t total_subgroups = 0, total_codes = 0;
  for (const auto& e : report.entries) {
    os << std::left << std::setw(static_cast<int>(width)) << e.label << "  ";
    if (e.error) {
      os << "error: " << *e.error << '\n';
      continue;
    }
    os << std::right << std::setw(10) << e.records.size() << "  " << std::setw(6) << e.codes << "  "
       << std::setw(13) << e.disagreements << "  " << std::setw(8) << e.findings << '\n';
    total_subgroups += e.records.size();
    total_codes += e.codes;
  }
  os << std::left << std::setw(static_cast<int>(width)) << "total" << "  " << std::right << std::setw(10)
     << total_subgroups << "  " << std::setw(6) << total_codes << "  " << std::setw(13) << report.disagreements()
     << "  " << std::setw(8) << report.findings() << '\n';
  return os.str();
}

}  // namespace pcl
