#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcl/group.hpp"

namespace pcl {

/// A catalog line before construction: spec text plus an optional display
/// label (e.g. "A5" for a permutation spec).
struct CatalogSpec {
  std::string spec;
  std::string label;
};

/// Structural tags: "abelian-2", "a1-2group", "dihedral", "abelian-sylow2",
/// "mixed-order".
using TagSet = std::set<std::string>;

struct CatalogEntry {
  std::string spec;
  std::string label;
  /// Null when construction failed; `error` then says why.
  GroupPtr group;
  TagSet tags;
  std::optional<std::string> error;
  bool size_limited = false;
};

TagSet compute_tags(const Group& g);

std::vector<CatalogSpec> default_catalog_specs();

/// Builds every spec. Construction failures are kept per entry so a run can
/// report them without stopping.
std::vector<CatalogEntry> build_catalog(const std::vector<CatalogSpec>& specs,
                                        const Limits& limits = Limits::from_env());

std::vector<CatalogEntry> default_catalog(const Limits& limits = Limits::from_env());

/// Reads a JSON array whose items are spec strings or {"spec": ..., "label": ...}.
/// Throws pcl::Error on malformed files.
std::vector<CatalogSpec> load_catalog_file(const std::filesystem::path& path);

}  // namespace pcl
