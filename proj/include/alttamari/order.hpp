#pragma once

#include "alttamari/path.hpp"
#include "alttamari/tree.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace alttamari {

using ElementId = std::size_t;
using Bitset = boost::dynamic_bitset<>;

/// A covering relation low < high produced by a delta-rotation at `valley`
/// of the lower path.
struct Cover {
    ElementId low = 0;
    ElementId high = 0;
    Valley valley;

    friend bool operator==(const Cover &, const Cover &) = default;
};

/// The alt nu-Tamari lattice for one (nu, delta), held explicitly.
///
/// Elements are the nu-paths in canonical order (so id 0 is nu and the last
/// id is N^n E^m); every cover goes from a lower id to a higher one. Up and
/// down sets are cached as bitsets.
class FiniteLattice {
  public:
    FiniteLattice(LatticePath nu, IncrementVector delta);

    const LatticePath &nu() const noexcept { return nu_; }
    const IncrementVector &delta() const noexcept { return delta_; }
    const RegionPtr &region() const noexcept { return region_; }

    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const NuPath> elements() const noexcept { return elements_; }
    const NuPath &element(ElementId id) const { return elements_.at(id); }
    /// Sorted by (low, valley index).
    std::span<const Cover> covers() const noexcept { return covers_; }

    ElementId bottom() const noexcept { return 0; }
    ElementId top() const noexcept { return elements_.size() - 1; }

    std::optional<ElementId> find(const LatticePath &path) const;
    ElementId id_of(const GridTree &tree) const;
    /// right_flushing of element `id`, computed once at construction.
    const GridTree &tree(ElementId id) const { return trees_.at(id); }

    bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
    /// Elements >= a, including a.
    const Bitset &up_set(ElementId a) const { return up_.at(a); }
    /// Elements <= a, including a.
    const Bitset &down_set(ElementId a) const { return down_.at(a); }

    /// Throws InvariantBreach if no greatest lower bound exists.
    ElementId meet(ElementId a, ElementId b) const;
    /// Throws InvariantBreach if no least upper bound exists.
    ElementId join(ElementId a, ElementId b) const;

    /// Elements of [a, b] in increasing id order; empty unless a <= b.
    std::vector<ElementId> interval(ElementId a, ElementId b) const;

  private:
    LatticePath nu_;
    IncrementVector delta_;
    RegionPtr region_;
    std::vector<NuPath> elements_;
    std::vector<GridTree> trees_;
    std::map<std::vector<int>, ElementId> index_;
    std::vector<Cover> covers_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
};

FiniteLattice build_lattice(const LatticePath &nu, const IncrementVector &delta);

/// p is the top-left corner of the rectangle; q[0..l] run left to right
/// along its bottom side. `row` is the height of the q's.
struct HorizontalL {
    Point p;
    std::vector<Point> q;

    int length() const noexcept { return static_cast<int>(q.size()) - 1; }
    int row() const noexcept { return q.front().y; }
    friend bool operator==(const HorizontalL &, const HorizontalL &) = default;
};

/// p is the top-left corner of the rectangle; q[0..l] run top to bottom
/// along its right side. `reduced_column` is the position of their column in
/// reduced_column_order().
struct VerticalL {
    Point p;
    std::vector<Point> q;
    int reduced_column = 0;

    int length() const noexcept { return static_cast<int>(q.size()) - 1; }
    friend bool operator==(const VerticalL &, const VerticalL &) = default;
};

/// One horizontal L per row i < n holding at least l + 1 nodes.
std::vector<HorizontalL> left_intervals_from(const GridTree &tree, int length);

/// One vertical L per reduced column holding at least l + 1 relevant nodes.
std::vector<VerticalL> right_intervals_to(const GridTree &tree, int length);

/// T + L: rotates q_0, ..., q_{l-1} in order.
GridTree apply_left(const GridTree &tree, const HorizontalL &l);
/// T - L: rotates q_0, ..., q_{l-1} down in order.
GridTree apply_right(const GridTree &tree, const VerticalL &l);

enum class IntervalKind { trivial, left, right, non_linear };

const char *to_string(IntervalKind kind);

struct IntervalRecord {
    ElementId bottom = 0;
    ElementId top = 0;
    /// Number of covers in the chain; for non-linear intervals the length of
    /// a longest chain.
    int length = 0;
    IntervalKind kind = IntervalKind::trivial;
    /// Length-one intervals are both left and right; they are stored as left.
    bool also_right = false;
    std::variant<std::monostate, HorizontalL, VerticalL> witness;
};

/// Counts indexed by length. left[0] and right[0] are zero; left[1] and
/// right[1] both equal the number of covers; total[k] = left[k] + right[k]
/// for k >= 2.
struct Census {
    std::vector<std::size_t> total;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::vector<IntervalRecord> records;

    bool same_counts(const Census &other) const {
        return total == other.total && left == other.left && right == other.right;
    }
};

/// Every linear interval, found from horizontal L's at each bottom element
/// and vertical L's at each top element.
Census linear_interval_census(const FiniteLattice &lattice);

/// Throws ContractError unless bottom <= top.
IntervalRecord classify_interval(const FiniteLattice &lattice, ElementId bottom, ElementId top);

/// Checks that every strict relation of the delta_wide order also holds in
/// the delta_narrow order (delta_narrow <= delta_wide componentwise) and
/// returns how many were checked. Throws ContractError for incomparable
/// vectors and InvariantBreach if a relation is missing.
std::size_t extension_check(const LatticePath &nu, const IncrementVector &delta_narrow,
                            const IncrementVector &delta_wide);

/// Hasse diagram of a strict order given as `above[a]` = {b : a < b}.
std::vector<std::pair<ElementId, ElementId>> transitive_reduction(std::span<const Bitset> above);

} // namespace alttamari
