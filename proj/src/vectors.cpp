#include "alttamari/vectors.hpp"

#include "alttamari/errors.hpp"

#include <algorithm>
#include <numeric>

namespace alttamari {

namespace {

std::vector<int> sorted_by_length(std::vector<int> xs, const auto &length) {
    std::stable_sort(xs.begin(), xs.end(), [&](int a, int b) {
        int la = length(a), lb = length(b);
        if (la != lb)
            return la < lb;
        return a > b;
    });
    return xs;
}

std::optional<VectorViolation> check_prefix_bounds(std::span<const int> v,
                                                   std::span<const int> bound, bool total,
                                                   const char *name) {
    if (v.size() != bound.size()) {
        return VectorViolation{0, static_cast<int>(v.size()),
                               std::string(name) + " has " + std::to_string(v.size()) +
                                   " entries, expected " + std::to_string(bound.size())};
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            return VectorViolation{1, static_cast<int>(i),
                                   std::string(name) + " entry " + std::to_string(i) +
                                       " is negative"};
        }
    }
    long sum = 0, limit = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        sum += v[j];
        limit += bound[j];
        if (sum > limit) {
            return VectorViolation{2, static_cast<int>(j),
                                   std::string(name) + " prefix sum " + std::to_string(sum) +
                                       " exceeds " + std::to_string(limit) + " at index " +
                                       std::to_string(j)};
        }
    }
    if (total && sum != limit) {
        return VectorViolation{3, static_cast<int>(v.size()) - 1,
                               std::string(name) + " total " + std::to_string(sum) +
                                   " differs from " + std::to_string(limit)};
    }
    return std::nullopt;
}

std::vector<int> position_of(const std::vector<int> &order, int width) {
    std::vector<int> pos(static_cast<std::size_t>(width) + 1, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return pos;
}

} // namespace

RowVector row_vector(const GridTree &tree) {
    std::vector<int> r(static_cast<std::size_t>(tree.region().height()) + 1, -1);
    for (Point p : tree.nodes())
        ++r[static_cast<std::size_t>(p.y)];
    return {std::move(r)};
}

std::vector<int> column_order(const GridRegion &region) {
    std::vector<int> xs(static_cast<std::size_t>(region.width()) + 1);
    std::iota(xs.begin(), xs.end(), 0);
    return sorted_by_length(std::move(xs), [&](int x) { return region.column_length(x); });
}

int reduced_column_length(const GridRegion &region, int x) {
    int count = 0;
    for (int y = region.column_bottom(x); y <= region.height(); ++y)
        if (x > region.row_left(y))
            ++count;
    return count;
}

std::vector<int> reduced_column_order(const GridRegion &region) {
    std::vector<int> xs;
    for (int x = 0; x <= region.width(); ++x)
        if (reduced_column_length(region, x) > 0)
            xs.push_back(x);
    return sorted_by_length(std::move(xs), [&](int x) { return reduced_column_length(region, x); });
}

RelevantPartition relevant_points(const GridRegion &region) {
    RelevantPartition out;
    for (Point p : region.points()) {
        if (region.is_non_relevant(p))
            out.non_relevant.push_back(p);
        else
            out.relevant.push_back(p);
    }
    return out;
}

ColumnVector column_vector(const GridTree &tree) {
    const auto order = column_order(tree.region());
    std::vector<int> c;
    c.reserve(order.size());
    for (int x : order)
        c.push_back(static_cast<int>(tree.column(x).size()) - 1);
    return {std::move(c)};
}

ReducedColumnVector reduced_column_vector(const GridTree &tree) {
    const auto &region = tree.region();
    const auto order = reduced_column_order(region);
    std::vector<int> c;
    c.reserve(order.size());
    for (int x : order) {
        auto column = tree.column(x);
        auto relevant = std::count_if(column.begin(), column.end(),
                                      [&](Point p) { return !region.is_non_relevant(p); });
        c.push_back(static_cast<int>(relevant) - 1);
    }
    return {std::move(c)};
}

std::optional<VectorViolation> validate_row_vector(std::span<const int> r, const LatticePath &nu) {
    return check_prefix_bounds(r, nu.composition(), true, "row vector");
}

std::optional<VectorViolation> validate_column_vector(std::span<const int> c,
                                                      const LatticePath &nu) {
    const auto reversed = reverse_path(nu);
    return check_prefix_bounds(c, reversed.composition(), true, "column vector");
}

std::optional<VectorViolation> validate_reduced_column_vector(std::span<const int> c,
                                                              const LatticePath &nu) {
    const auto reversed = reverse_path(nu);
    auto bound = reversed.composition();
    if (bound.size() > 0)
        bound = bound.first(bound.size() - 1);
    return check_prefix_bounds(c, bound, false, "reduced column vector");
}

GridTree down_flushing(const ColumnVector &c, const RegionPtr &region) {
    if (auto bad = validate_column_vector(c.entries, region->nu()))
        throw ValidationError(bad->message);
    const auto pos = position_of(column_order(*region), region->width());
    std::vector<bool> blocked(static_cast<std::size_t>(region->height()) + 1, false);
    std::vector<Point> nodes;
    for (int x = region->width(); x >= 0; --x) {
        int wanted = c.entries[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])] + 1;
        std::vector<int> placed;
        for (int y = region->column_bottom(x); y <= region->height() && wanted > 0; ++y) {
            if (blocked[static_cast<std::size_t>(y)])
                continue;
            placed.push_back(y);
            --wanted;
        }
        if (wanted > 0) {
            throw InvariantBreach("down flushing ran out of room in column " + std::to_string(x));
        }
        for (std::size_t k = 0; k < placed.size(); ++k) {
            nodes.push_back({x, placed[k]});
            if (k + 1 < placed.size())
                blocked[static_cast<std::size_t>(placed[k])] = true;
        }
    }
    return GridTree(region, std::move(nodes));
}

GridTree reduced_down_flushing(const ReducedColumnVector &c, const RegionPtr &region) {
    if (auto bad = validate_reduced_column_vector(c.entries, region->nu()))
        throw ValidationError(bad->message);
    const auto pos = position_of(reduced_column_order(*region), region->width());
    std::vector<bool> blocked(static_cast<std::size_t>(region->height()) + 1, false);
    std::vector<Point> nodes;
    for (int x = region->width(); x >= 0; --x) {
        const int slot = pos[static_cast<std::size_t>(x)];
        int wanted = slot < 0 ? 0 : c.entries[static_cast<std::size_t>(slot)] + 1;
        std::vector<int> placed;
        // Non-relevant points sit at the bottom of a column, relevant ones above.
        for (int y = region->column_bottom(x); y <= region->height(); ++y) {
            if (blocked[static_cast<std::size_t>(y)])
                continue;
            if (region->is_non_relevant({x, y})) {
                placed.push_back(y);
            } else if (wanted > 0) {
                placed.push_back(y);
                --wanted;
            }
        }
        if (wanted > 0) {
            throw InvariantBreach("reduced down flushing ran out of room in column " +
                                  std::to_string(x));
        }
        for (std::size_t k = 0; k < placed.size(); ++k) {
            nodes.push_back({x, placed[k]});
            if (k + 1 < placed.size())
                blocked[static_cast<std::size_t>(placed[k])] = true;
        }
    }
    return GridTree(region, std::move(nodes));
}

} // namespace alttamari
