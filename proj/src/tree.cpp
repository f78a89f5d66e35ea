#include "alttamari/tree.hpp"

#include "alttamari/errors.hpp"

#include <algorithm>

namespace alttamari {

GridRegion::GridRegion(LatticePath nu, IncrementVector delta)
    : nu_(std::move(nu)), delta_(std::move(delta)), check_nu_(alttamari::check_nu(nu_, delta_)) {
    if (!(delta_.bound() == nu_))
        throw ContractError("increment vector was built for a different base path");
    const int n = nu_.height();
    const int m = nu_.width();
    const auto ferrers = check_nu_.prefix_sums();

    int left = check_nu_.run(0) - nu_.run(0);
    for (int y = 0; y <= n; ++y) {
        if (y > 0)
            left -= nu_.run(y) - delta_[y];
        left_.push_back(left);
        right_.push_back(ferrers[static_cast<std::size_t>(y)]);
    }

    bottom_.assign(static_cast<std::size_t>(m) + 1, n);
    for (int x = 0; x <= m; ++x) {
        for (int y = 0; y <= n; ++y) {
            if (row_left(y) <= x && x <= row_right(y)) {
                bottom_[static_cast<std::size_t>(x)] = y;
                break;
            }
        }
    }
}

bool GridRegion::contains(Point p) const {
    return p.y >= 0 && p.y <= height() && p.x >= row_left(p.y) && p.x <= row_right(p.y);
}

bool GridRegion::in_ferrers(Point p) const {
    return p.y >= 0 && p.y <= height() && p.x >= 0 &&
           p.x <= row_right(p.y);
}

std::vector<Point> GridRegion::points() const {
    std::vector<Point> out;
    for (int y = 0; y <= height(); ++y)
        for (int x = row_left(y); x <= row_right(y); ++x)
            out.push_back({x, y});
    return out;
}

RegionPtr build_region(const LatticePath &nu, const IncrementVector &delta) {
    return std::make_shared<const GridRegion>(nu, delta);
}

bool compatible(Point p, Point q, const GridRegion &region) {
    if (q < p)
        std::swap(p, q);
    // Now p.y <= q.y. Strictly SW/NE requires p.y < q.y and p.x < q.x; the
    // spanned rectangle is inside the Ferrers shape iff its bottom-right
    // corner is.
    if (p.y < q.y && p.x < q.x)
        return !region.in_ferrers({q.x, p.y});
    return true;
}

GridTree::GridTree(RegionPtr region, std::vector<Point> nodes)
    : region_(std::move(region)), nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
        throw ValidationError("tree has repeated nodes");
    const auto expected = static_cast<std::size_t>(region_->width() + region_->height() + 1);
    if (nodes_.size() != expected) {
        throw ValidationError("tree has " + std::to_string(nodes_.size()) +
                              " nodes, expected m+n+1 = " + std::to_string(expected));
    }
    for (Point p : nodes_) {
        if (!region_->contains(p)) {
            throw ValidationError("node (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                  ") lies outside the region");
        }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (!compatible(nodes_[i], nodes_[j], *region_)) {
                throw ValidationError("nodes (" + std::to_string(nodes_[i].x) + "," +
                                      std::to_string(nodes_[i].y) + ") and (" +
                                      std::to_string(nodes_[j].x) + "," +
                                      std::to_string(nodes_[j].y) + ") are incompatible");
            }
        }
    }
}

bool GridTree::contains(Point p) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), p);
}

std::vector<Point> GridTree::row(int y) const {
    std::vector<Point> out;
    for (Point p : nodes_)
        if (p.y == y)
            out.push_back(p);
    return out;
}

std::vector<Point> GridTree::column(int x) const {
    std::vector<Point> out;
    for (Point p : nodes_)
        if (p.x == x)
            out.push_back(p);
    return out;
}

std::optional<Point> GridTree::next_above(Point p) const {
    for (Point q : nodes_)
        if (q.x == p.x && q.y > p.y)
            return q;
    return std::nullopt;
}

std::optional<Point> GridTree::next_below(Point p) const {
    std::optional<Point> best;
    for (Point q : nodes_)
        if (q.x == p.x && q.y < p.y)
            best = q;
    return best;
}

std::optional<Point> GridTree::next_right(Point p) const {
    for (Point q : nodes_)
        if (q.y == p.y && q.x > p.x)
            return q;
    return std::nullopt;
}

std::optional<Point> GridTree::next_left(Point p) const {
    std::optional<Point> best;
    for (Point q : nodes_)
        if (q.y == p.y && q.x < p.x)
            best = q;
    return best;
}

std::vector<std::pair<Point, Point>> GridTree::edges() const {
    std::vector<std::pair<Point, Point>> out;
    for (Point p : nodes_) {
        if (auto r = next_right(p))
            out.emplace_back(p, *r);
        if (auto a = next_above(p))
            out.emplace_back(p, *a);
    }
    return out;
}

namespace {

std::string fmt_point(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::size_t nodes_in_rectangle(const GridTree &tree, Point lo, Point hi) {
    return static_cast<std::size_t>(std::count_if(
        tree.nodes().begin(), tree.nodes().end(), [&](Point p) {
            return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
        }));
}

GridTree replace_node(const GridTree &tree, Point from, Point to) {
    std::vector<Point> nodes(tree.nodes().begin(), tree.nodes().end());
    *std::find(nodes.begin(), nodes.end(), from) = to;
    return GridTree(tree.region_ptr(), std::move(nodes));
}

} // namespace

GridTree tree_rotation(const GridTree &tree, Point q) {
    if (!tree.contains(q))
        throw ContractError("rotation pivot " + fmt_point(q) + " is not a node");
    auto p = tree.next_above(q);
    auto r = tree.next_right(q);
    if (!p || !r)
        throw ContractError("node " + fmt_point(q) + " admits no rotation");
    if (nodes_in_rectangle(tree, q, {r->x, p->y}) != 3)
        throw ContractError("rectangle at " + fmt_point(q) + " contains other nodes");
    Point q_prime{r->x, p->y};
    if (!tree.region().contains(q_prime)) {
        throw RotationLeavesRegion("rotation at " + fmt_point(q) + " would create " +
                                   fmt_point(q_prime) + " outside the region");
    }
    return replace_node(tree, q, q_prime);
}

GridTree tree_rotation_down(const GridTree &tree, Point q_prime) {
    if (!tree.contains(q_prime))
        throw ContractError("rotation pivot " + fmt_point(q_prime) + " is not a node");
    auto p = tree.next_left(q_prime);
    auto r = tree.next_below(q_prime);
    if (!p || !r)
        throw ContractError("node " + fmt_point(q_prime) + " admits no downward rotation");
    if (nodes_in_rectangle(tree, {p->x, r->y}, q_prime) != 3)
        throw ContractError("rectangle at " + fmt_point(q_prime) + " contains other nodes");
    Point q{p->x, r->y};
    if (!tree.region().contains(q)) {
        throw RotationLeavesRegion("downward rotation at " + fmt_point(q_prime) +
                                   " would create " + fmt_point(q) + " outside the region");
    }
    return replace_node(tree, q_prime, q);
}

GridTree right_flushing(const NuPath &mu, const RegionPtr &region) {
    if (!(mu.base() == region->nu()))
        throw ContractError("path and region have different base paths");
    const int n = region->height();
    std::vector<bool> blocked(static_cast<std::size_t>(region->width()) + 1, false);
    std::vector<Point> nodes;
    for (int y = 0; y <= n; ++y) {
        int wanted = mu.path().run(y) + 1;
        std::vector<int> placed;
        for (int x = region->row_right(y); x >= region->row_left(y) && wanted > 0; --x) {
            if (blocked[static_cast<std::size_t>(x)])
                continue;
            placed.push_back(x);
            --wanted;
        }
        if (wanted > 0) {
            throw InvariantBreach("right flushing ran out of room in row " + std::to_string(y) +
                                  " for path " + mu.path().word());
        }
        // placed is right-to-left; all but the last (leftmost) forbid above.
        for (std::size_t k = 0; k < placed.size(); ++k) {
            nodes.push_back({placed[k], y});
            if (k + 1 < placed.size())
                blocked[static_cast<std::size_t>(placed[k])] = true;
        }
    }
    return GridTree(region, std::move(nodes));
}

NuPath left_flushing(const GridTree &tree) {
    std::vector<int> runs(static_cast<std::size_t>(tree.region().height()) + 1, -1);
    for (Point p : tree.nodes())
        ++runs[static_cast<std::size_t>(p.y)];
    for (std::size_t y = 0; y < runs.size(); ++y) {
        if (runs[y] < 0)
            throw InvariantBreach("tree has an empty row " + std::to_string(y));
    }
    return NuPath(LatticePath::from_composition(std::move(runs)), tree.region().nu());
}

} // namespace alttamari
