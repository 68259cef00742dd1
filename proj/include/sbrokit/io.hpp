#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"

namespace sbrokit {

/// Parses a matroid document (JSON). Leaves carry "type" (linear, graphic,
/// partition, uniform, paving, spike, cyclic_flats, catalog); operator
/// nodes carry "op" (dual, delete, contract, direct_sum, truncate,
/// principal_extension, relaxation) and their operands under "of" or
/// "args". Any node may carry "labels". Throws InputError naming the
/// offending location as a JSON pointer.
Matroid parse_matroid(std::string_view text);

/// Document for m, compact unless indent >= 0. Catalog matroids serialize
/// by representation, not by name.
std::string serialize_matroid(const Matroid& m, int indent = -1);

/// "1,2,5" (whitespace allowed, empty for the empty set). Throws
/// InputError on anything else or on elements outside 0..63.
ElementSet parse_csv_set(std::string_view text);
/// "A;B" with both sides in parse_csv_set syntax.
std::pair<ElementSet, ElementSet> parse_csv_pair(std::string_view text);

}  // namespace sbrokit
