#pragma once

#include "alttamari/path.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace alttamari {

/// The lattice points L_{delta,nu}: the part of the Ferrers diagram above
/// check_nu(nu, delta) that lies weakly above the west/north path
/// W^{nu_0} N W^{gamma_1} ... N W^{gamma_n}, gamma_i = nu_i - delta_i,
/// started at (check_nu_0, 0).
///
/// Every row y is the contiguous run [row_left(y), row_right(y)] with
/// nu_0 + ... + nu_y + 1 points. Every column is a contiguous run ending at
/// the top row.
class GridRegion {
  public:
    GridRegion(LatticePath nu, IncrementVector delta);

    const LatticePath &nu() const noexcept { return nu_; }
    const IncrementVector &delta() const noexcept { return delta_; }
    const LatticePath &check_nu() const noexcept { return check_nu_; }

    /// n, the number of rows minus one.
    int height() const noexcept { return nu_.height(); }
    /// m, the number of columns minus one.
    int width() const noexcept { return nu_.width(); }

    int row_left(int y) const { return left_.at(static_cast<std::size_t>(y)); }
    /// Also the right edge of the Ferrers diagram of check_nu in that row.
    int row_right(int y) const { return right_.at(static_cast<std::size_t>(y)); }
    /// Lowest y with (x, y) in the region.
    int column_bottom(int x) const { return bottom_.at(static_cast<std::size_t>(x)); }
    int column_length(int x) const { return height() - column_bottom(x) + 1; }

    bool contains(Point p) const;
    /// Membership in the full Ferrers diagram of check_nu.
    bool in_ferrers(Point p) const;
    /// The leftmost point of its row.
    bool is_non_relevant(Point p) const { return contains(p) && p.x == row_left(p.y); }

    Point top_left() const noexcept { return {0, height()}; }

    /// All points, sorted by (y, x).
    std::vector<Point> points() const;

  private:
    LatticePath nu_;
    IncrementVector delta_;
    LatticePath check_nu_;
    std::vector<int> left_;
    std::vector<int> right_;
    std::vector<int> bottom_;
};

using RegionPtr = std::shared_ptr<const GridRegion>;

RegionPtr build_region(const LatticePath &nu, const IncrementVector &delta);

/// check_nu-compatibility: false iff one point is strictly south-west of the
/// other and the rectangle they span lies inside the Ferrers diagram of
/// check_nu.
bool compatible(Point p, Point q, const GridRegion &region);

/// A (delta,nu)-tree: a maximal set of pairwise compatible points of the
/// region. Only the node set is stored; edges are derived on demand.
class GridTree {
  public:
    /// Validates region membership, pairwise compatibility and size
    /// m + n + 1 (which together imply maximality). Throws ValidationError.
    GridTree(RegionPtr region, std::vector<Point> nodes);

    const GridRegion &region() const noexcept { return *region_; }
    const RegionPtr &region_ptr() const noexcept { return region_; }

    /// Sorted by (y, x).
    std::span<const Point> nodes() const noexcept { return nodes_; }
    bool contains(Point p) const;

    std::vector<Point> row(int y) const;
    std::vector<Point> column(int x) const;

    std::optional<Point> next_above(Point p) const;
    std::optional<Point> next_below(Point p) const;
    std::optional<Point> next_right(Point p) const;
    std::optional<Point> next_left(Point p) const;

    /// Parent/child edges: consecutive nodes in a row or a column.
    std::vector<std::pair<Point, Point>> edges() const;

    friend bool operator==(const GridTree &a, const GridTree &b) {
        return a.region_->nu() == b.region_->nu() && a.region_->delta() == b.region_->delta() &&
               a.nodes_ == b.nodes_;
    }

  private:
    RegionPtr region_;
    std::vector<Point> nodes_;
};

/// Rotation at q: with p the node above q and r the node right of q and
/// nothing else in their rectangle, replaces q by the top-right corner.
/// Throws ContractError when q admits no rotation and RotationLeavesRegion
/// when the new node is outside L_{delta,nu}.
GridTree tree_rotation(const GridTree &tree, Point q);

/// Inverse rotation at q': with p the node left of q' and r the node below
/// q', replaces q' by the bottom-left corner. Same error behaviour.
GridTree tree_rotation_down(const GridTree &tree, Point q_prime);

/// Adds mu_i + 1 nodes per row, bottom to top and right to left, skipping
/// positions above any node that is not leftmost in its row.
GridTree right_flushing(const NuPath &mu, const RegionPtr &region);

/// The nu-path with as many east steps per row as the tree has nodes, minus one.
NuPath left_flushing(const GridTree &tree);

} // namespace alttamari
