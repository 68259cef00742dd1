#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"

namespace sbrokit {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string provenance;
  int size = 0;
  int rank = 0;
  /// -1 when no basis count is recorded.
  long long bases = -1;
};

/// Fixed entries, in a stable order. The parameterized families
/// whirl_R and u_R_N are listed as "whirl_r" and "u_r_n".
const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();

/// True for fixed names and well-formed whirl_R / u_R_N names.
bool catalog_has(std::string_view name);

/// Builds (once) and returns the entry; quick-checks size, rank and basis
/// count. Throws InputError for unknown names and ConstructionError when a
/// quick-check fails.
Matroid catalog_get(std::string_view name);

/// Metadata for any valid name, including parameterized ones.
CatalogEntry catalog_entry(std::string_view name);

struct SelfCheckReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> facts;
  std::vector<std::string> mismatches;
};

/// Runs every recorded fact for the entry.
SelfCheckReport self_check(std::string_view name);

/// Wheel with r spokes: hub 0, rim vertices 1..r. Spoke i is element
/// 2(i-1), rim edge (i, i+1) is element 2(i-1)+1.
Matroid make_wheel(int r);
/// The wheel with its rim relaxed to a basis.
Matroid make_whirl(int r);
/// Odd elements of make_wheel(r).
ElementSet wheel_rim(int r);

/// Element index of a label in a catalog matroid (e.g. "a" in x10).
int element_of(const Matroid& m, std::string_view label);
/// Parses comma-separated labels (or indices) of a catalog matroid.
ElementSet elements_of(const Matroid& m, std::string_view labels);

}  // namespace sbrokit
