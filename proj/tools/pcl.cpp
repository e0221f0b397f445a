// pcl: command-line front end for the subgroup perfect code library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcl/builders.hpp"
#include "pcl/catalog.hpp"
#include "pcl/classifier.hpp"
#include "pcl/errors.hpp"
#include "pcl/perfect_code.hpp"
#include "pcl/report.hpp"
#include "pcl/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeLimit = 3;

// "@file" reads a raw multiplication table; anything else is a group spec.
pcl::GroupPtr load_group(const std::string& text, const pcl::Limits& limits) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw pcl::Error("cannot open table file " + text.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return pcl::build_family(pcl::parse_table_text(buf.str()), limits);
  }
  return pcl::build_group(text, limits);
}

std::vector<pcl::Method> parse_methods(const std::string& list) {
  std::vector<pcl::Method> methods;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    auto m = pcl::method_from_string(name);
    if (!m) throw pcl::Error("unknown method '" + name + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw pcl::Error("no methods selected");
  return methods;
}

std::vector<pcl::Element> parse_elements(const std::string& list, const pcl::Group& g) {
  std::vector<pcl::Element> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw pcl::Error("bad element index '" + item + "'");
    if (v >= g.order()) throw pcl::Error("element index " + item + " out of range");
    out.push_back(static_cast<pcl::Element>(v));
  }
  return out;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw pcl::Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json subgroup_json(const pcl::Subgroup& h) {
  return {{"elements", h.elements()},
          {"order", h.order()},
          {"generators", std::vector<pcl::Element>(h.generators().begin(), h.generators().end())}};
}

nlohmann::json group_json(const pcl::Group& g) {
  std::vector<std::vector<pcl::Element>> rows(g.order());
  std::vector<std::uint32_t> orders(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    orders[x] = g.element_order(static_cast<pcl::Element>(x));
    for (std::size_t y = 0; y < g.order(); ++y)
      rows[x].push_back(g.mul(static_cast<pcl::Element>(x), static_cast<pcl::Element>(y)));
  }
  const auto tags = pcl::compute_tags(g);
  return {{"label", g.label()},
          {"order", g.order()},
          {"identity", 0},
          {"generators", std::vector<pcl::Element>(g.generators().begin(), g.generators().end())},
          {"abelian", g.is_abelian()},
          {"tags", std::vector<std::string>(tags.begin(), tags.end())},
          {"element_orders", orders},
          {"table", rows}};
}

int cmd_build(const std::string& spec, const std::string& out_path) {
  auto g = load_group(spec, pcl::Limits::from_env());
  write_json(group_json(*g), out_path);
  return kExitOk;
}

int cmd_subgroups(const std::string& spec, const std::string& out_path) {
  auto g = load_group(spec, pcl::Limits::from_env());
  nlohmann::json list = nlohmann::json::array();
  for (const auto& h : pcl::all_subgroups(*g)) list.push_back(subgroup_json(h));
  write_json({{"group", g->label()}, {"count", list.size()}, {"subgroups", std::move(list)}}, out_path);
  return kExitOk;
}

int cmd_classify(const std::string& spec, const std::string& subgroup, const std::string& methods_text) {
  auto g = load_group(spec, pcl::Limits::from_env());
  pcl::MatrixOptions options;
  options.methods = parse_methods(methods_text);
  options.deterministic = true;
  std::vector<pcl::Subgroup> targets;
  if (subgroup.empty()) {
    targets = pcl::all_subgroups(*g);
  } else {
    const auto gens = parse_elements(subgroup, *g);
    targets.push_back(pcl::subgroup_generated(*g, gens));
  }
  const auto dispatch = pcl::select_classifier(*g);
  bool agree = true;
  for (const auto& h : targets) {
    const auto rec = pcl::evaluate_subgroup(g->label(), *g, dispatch, h, options);
    agree = agree && rec.agreement;
    for (const auto& r : rec.verdicts) {
      nlohmann::json line{{"group", g->label()},
                          {"subgroup", h.elements()},
                          {"method", pcl::to_string(r.method)},
                          {"evidence", r.evidence}};
      line["is_code"] = r.is_code ? nlohmann::json(*r.is_code) : nlohmann::json(nullptr);
      std::cout << line.dump() << '\n';
    }
  }
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_verify(const std::string& catalog, const std::string& methods_text, const std::string& out_path,
               const std::string& summary, bool deterministic) {
  if (!summary.empty() && summary != "table") throw pcl::Error("unknown summary format '" + summary + "'");
  pcl::MatrixOptions options;
  options.methods = parse_methods(methods_text);
  options.deterministic = deterministic;
  const auto specs = catalog == "default" ? pcl::default_catalog_specs() : pcl::load_catalog_file(catalog);
  const auto entries = pcl::build_catalog(specs, pcl::Limits::from_env());

  pcl::Report report;
  if (out_path.empty() || out_path == "-") {
    report = pcl::run_verification_matrix(entries, options, summary.empty() ? &std::cout : nullptr);
  } else {
    std::ofstream out(out_path);
    if (!out) throw pcl::Error("cannot write " + out_path);
    report = pcl::run_verification_matrix(entries, options, &out);
  }
  if (!summary.empty()) std::cout << pcl::render_summary_table(report);
  for (const auto& e : report.entries)
    if (e.error) std::cerr << "pcl: " << e.label << ": " << *e.error << '\n';
  if (report.disagreements() > 0) return kExitDisagreement;
  if (report.any_size_limit()) return kExitSizeLimit;
  if (report.any_error()) return kExitInput;
  return kExitOk;
}

int cmd_codeperfect(const std::string& spec) {
  auto g = load_group(spec, pcl::Limits::from_env());
  nlohmann::json j{{"group", g->label()}, {"code_perfect", pcl::is_code_perfect(*g)}};
  for (std::size_t x = 0; x < g->order(); ++x)
    if (g->element_order(static_cast<pcl::Element>(x)) == 4) {
      j["order4_element"] = x;
      break;
    }
  std::cout << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup perfect codes in Cayley graphs"};
  app.require_subcommand(1);
  const std::string all_methods = "criterion3,criterion4,oracle,cayley,theorem";

  std::string spec, out_path, subgroup, methods = all_methods, catalog = "default", summary;
  bool deterministic = false;

  auto* build = app.add_subcommand("build", "Build a group and print its table as JSON");
  build->add_option("spec", spec, "Group spec, or @file for a raw table")->required();
  build->add_option("--out", out_path, "Output file");

  auto* subgroups = app.add_subcommand("subgroups", "List every subgroup");
  subgroups->add_option("spec", spec, "Group spec, or @file for a raw table")->required();
  subgroups->add_option("--out", out_path, "Output file");

  auto* classify = app.add_subcommand("classify", "Decide whether subgroups are perfect codes");
  classify->add_option("spec", spec, "Group spec, or @file for a raw table")->required();
  classify->add_option("--subgroup", subgroup, "Generators of H as element indices, comma separated");
  classify->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every method over a catalog");
  verify->add_option("--catalog", catalog, "default or a JSON file")->capture_default_str();
  verify->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();
  verify->add_option("--out", out_path, "JSON lines report (stdout when omitted)");
  verify->add_option("--summary", summary, "Print a summary (table)");
  verify->add_flag("--deterministic", deterministic, "Write all timings as 0");

  auto* codeperfect = app.add_subcommand("codeperfect", "Check for elements of order 4");
  codeperfect->add_option("spec", spec, "Group spec, or @file for a raw table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*build) return cmd_build(spec, out_path);
    if (*subgroups) return cmd_subgroups(spec, out_path);
    if (*classify) return cmd_classify(spec, subgroup, methods);
    if (*verify) return cmd_verify(catalog, methods, out_path, summary, deterministic);
    if (*codeperfect) return cmd_codeperfect(spec);
  } catch (const pcl::SizeLimitExceeded& e) {
    std::cerr << "pcl: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const pcl::Error& e) {
    std::cerr << "pcl: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
