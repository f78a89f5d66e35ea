#pragma once

#include "alttamari/order.hpp"
#include "alttamari/transport.hpp"
#include "alttamari/tree.hpp"

#include <json.hpp>

#include <string>

namespace alttamari {

using Json = nlohmann::json;

/// {"nu", "delta", "elements": [{"id", "path"}], "covers": [[lo, hi]],
/// "linear_counts"}.
Json lattice_to_json(const FiniteLattice &lattice, const Census &census);

/// One node per element labelled by its composition, one edge per cover,
/// lower elements ranked first. Byte-for-byte deterministic.
std::string lattice_to_dot(const FiniteLattice &lattice);

/// {"nu": word, "delta": [...], "nodes": [[x, y], ...]}, nodes sorted by
/// (y, x).
Json tree_to_json(const GridTree &tree);

/// Throws ValidationError on malformed documents or invalid trees.
GridTree tree_from_json(const Json &doc);

/// {"nu", "deltas_checked", "box_size", "census", "left", "right", "all_equal"}.
Json report_to_json(const TheoremReport &report);
TheoremReport report_from_json(const Json &doc);

/// The census as a table: one line per length with total, left and right.
std::string census_table(const Census &census);

} // namespace alttamari
