#include "pcl/catalog.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "pcl/builders.hpp"
#include "pcl/errors.hpp"
#include "pcl/structure.hpp"

namespace pcl {

TagSet compute_tags(const Group& g) {
  TagSet tags;
  const auto pp = prime_power(g.order());
  const bool two_group = g.order() == 1 || (pp && pp->first == 2);
  if (two_group && g.is_abelian()) tags.insert("abelian-2");
  if (two_group && !g.is_abelian() && is_minimal_nonabelian(g)) tags.insert("a1-2group");
  if (g.order() >= 6 && recognize_dihedral(g)) tags.insert("dihedral");
  const Subgroup p = sylow(g, 2);
  if (!p.is_trivial() && is_abelian(p)) tags.insert("abelian-sylow2");
  if (g.order() > 1 && !pp) tags.insert("mixed-order");
  return tags;
}

namespace {

// Partitions of k into parts <= max_part, largest part first.
void partitions(int k, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(k - part, part, current, out);
    current.pop_back();
  }
}

std::string abelian_2group_spec(const std::vector<int>& parts) {
  if (parts.empty()) return "C(1)";
  if (parts.size() > 1 && parts.front() == 1) return "EA(2," + std::to_string(parts.size()) + ")";
  std::string text;
  for (int e : parts) {
    if (!text.empty()) text += "x";
    text += "C(" + std::to_string(1 << e) + ")";
  }
  return text;
}

}  // namespace

std::vector<CatalogSpec> default_catalog_specs() {
  std::vector<CatalogSpec> specs;
  auto add = [&](std::string spec, std::string label = {}) {
    for (auto& s : specs)
      if (s.spec == spec) {
        if (s.label.empty()) s.label = std::move(label);
        return;
      }
    specs.push_back({std::move(spec), std::move(label)});
  };

  for (int k = 0; k <= 6; ++k) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions(k, k, current, parts);
    for (const auto& p : parts) add(abelian_2group_spec(p));
  }
  add("Q8");
  for (int order = 8; order <= 24; order += 2) add("D(" + std::to_string(order) + ")");
  for (int n1 = 2; n1 <= 5; ++n1)
    for (int m1 = 1; n1 + m1 <= 6; ++m1) add("M2(" + std::to_string(n1) + "," + std::to_string(m1) + ")");
  for (int n2 = 1; n2 <= 2; ++n2)
    for (int m2 = n2; n2 + m2 <= 5; ++m2)
      if (n2 + m2 >= 3) add("M2(" + std::to_string(n2) + "," + std::to_string(m2) + ",1)");
  add("perm:(1,2,3),(1,2)", "S3");
  add("perm:(1,2,3),(1,2)(3,4)", "A4");
  add("perm:(1,2,3,4,5),(1,2,3)", "A5");
  add("perm:(1,2,3,4,5),(2,3,5,4)", "F20");
  add("SD(C(7);C(3);2)", "C7:C3");
  add("D(12)", "D12");
  return specs;
}

std::vector<CatalogEntry> build_catalog(const std::vector<CatalogSpec>& specs, const Limits& limits) {
  std::vector<CatalogEntry> entries;
  entries.reserve(specs.size());
  for (const auto& s : specs) {
    CatalogEntry e;
    e.spec = s.spec;
    e.label = s.label.empty() ? s.spec : s.label;
    try {
      e.group = build_group(s.spec, limits);
      e.tags = compute_tags(*e.group);
    } catch (const SizeLimitExceeded& ex) {
      e.error = ex.what();
      e.size_limited = true;
    } catch (const Error& ex) {
      e.error = ex.what();
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> default_catalog(const Limits& limits) {
  return build_catalog(default_catalog_specs(), limits);
}

std::vector<CatalogSpec> load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error("catalog file " + path.string() + ": " + ex.what());
  }
  if (!doc.is_array()) throw Error("catalog file must hold a JSON array");
  std::vector<CatalogSpec> specs;
  for (const auto& item : doc) {
    if (item.is_string()) {
      specs.push_back({item.get<std::string>(), {}});
    } else if (item.is_object() && item.contains("spec") && item["spec"].is_string()) {
      specs.push_back({item["spec"].get<std::string>(), item.value("label", std::string{})});
    } else {
      throw Error("catalog items must be spec strings or objects with a \"spec\" field");
    }
  }
  return specs;
}

}  // namespace pcl
