#pragma once

#include "alttamari/tree.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alttamari {

/// r_i + 1 nodes at height i.
struct RowVector {
    std::vector<int> entries;
    friend bool operator==(const RowVector &, const RowVector &) = default;
    friend auto operator<=>(const RowVector &, const RowVector &) = default;
};

/// c_i + 1 nodes in the i-th column of column_order().
struct ColumnVector {
    std::vector<int> entries;
    friend bool operator==(const ColumnVector &, const ColumnVector &) = default;
    friend auto operator<=>(const ColumnVector &, const ColumnVector &) = default;
};

/// c̄_i + 1 relevant nodes in the i-th column of reduced_column_order().
struct ReducedColumnVector {
    std::vector<int> entries;
    friend bool operator==(const ReducedColumnVector &, const ReducedColumnVector &) = default;
    friend auto operator<=>(const ReducedColumnVector &, const ReducedColumnVector &) = default;
};

/// First violated characterization condition: 1 (non-negativity),
/// 2 (prefix bound at `index`) or 3 (total). Condition 0 flags a length
/// mismatch.
struct VectorViolation {
    int condition = 0;
    int index = 0;
    std::string message;
};

RowVector row_vector(const GridTree &tree);

/// Column x-coordinates j_0, ..., j_m sorted by point count ascending,
/// then right to left.
std::vector<int> column_order(const GridRegion &region);

/// Relevant-point count of column x.
int reduced_column_length(const GridRegion &region, int x);

/// The m columns that hold relevant points, ordered like column_order().
std::vector<int> reduced_column_order(const GridRegion &region);

struct RelevantPartition {
    std::vector<Point> relevant;
    std::vector<Point> non_relevant;
};

/// Non-relevant points are the leftmost point of each row.
RelevantPartition relevant_points(const GridRegion &region);

ColumnVector column_vector(const GridTree &tree);
ReducedColumnVector reduced_column_vector(const GridTree &tree);

std::optional<VectorViolation> validate_row_vector(std::span<const int> r, const LatticePath &nu);
std::optional<VectorViolation> validate_column_vector(std::span<const int> c,
                                                      const LatticePath &nu);
std::optional<VectorViolation> validate_reduced_column_vector(std::span<const int> c,
                                                              const LatticePath &nu);

/// Rebuilds the unique tree with the given column vector: columns right to
/// left, nodes bottom to top, skipping rows left of a non-topmost node.
/// Throws ValidationError if `c` violates the characterization.
GridTree down_flushing(const ColumnVector &c, const RegionPtr &region);

/// As down_flushing, but each column first takes every unforbidden
/// non-relevant point, then c̄_i + 1 relevant points.
GridTree reduced_down_flushing(const ReducedColumnVector &c, const RegionPtr &region);

} // namespace alttamari
