#include "alttamari/order.hpp"

#include "alttamari/errors.hpp"
#include "alttamari/vectors.hpp"

#include <algorithm>
#include <set>

namespace alttamari {

FiniteLattice::FiniteLattice(LatticePath nu, IncrementVector delta)
    : nu_(std::move(nu)), delta_(std::move(delta)), region_(build_region(nu_, delta_)),
      elements_(enumerate_nu_paths(nu_)) {
    const std::size_t count = elements_.size();
    for (ElementId id = 0; id < count; ++id) {
        auto c = elements_[id].path().composition();
        index_.emplace(std::vector<int>(c.begin(), c.end()), id);
        trees_.push_back(right_flushing(elements_[id], region_));
    }

    for (ElementId id = 0; id < count; ++id) {
        for (const Valley &v : valleys(elements_[id].path())) {
            NuPath higher = delta_rotate(elements_[id], delta_, v);
            auto hi = find(higher.path());
            if (!hi)
                throw InvariantBreach("rotation produced a path outside the lattice");
            if (*hi <= id)
                throw InvariantBreach("rotation did not move up in the canonical order");
            if (higher.path().area_below() <= elements_[id].path().area_below())
                throw InvariantBreach("rotation did not increase the area below the path");
            covers_.push_back({id, *hi, v});
        }
    }

    up_.assign(count, Bitset(count));
    down_.assign(count, Bitset(count));
    for (ElementId id = count; id-- > 0;)
        up_[id].set(id);
    for (auto it = covers_.rbegin(); it != covers_.rend(); ++it)
        up_[it->low] |= up_[it->high];
    for (ElementId id = 0; id < count; ++id)
        down_[id].set(id);
    for (const Cover &c : covers_)
        down_[c.high] |= down_[c.low];
}

std::optional<ElementId> FiniteLattice::find(const LatticePath &path) const {
    auto c = path.composition();
    auto it = index_.find(std::vector<int>(c.begin(), c.end()));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ElementId FiniteLattice::id_of(const GridTree &tree) const {
    auto id = find(left_flushing(tree).path());
    if (!id)
        throw InvariantBreach("tree does not correspond to an element");
    return *id;
}

ElementId FiniteLattice::meet(ElementId a, ElementId b) const {
    Bitset common = down_[a] & down_[b];
    for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
        if (common.is_subset_of(down_[c]))
            return c;
    }
    throw InvariantBreach("elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " have no meet");
}

ElementId FiniteLattice::join(ElementId a, ElementId b) const {
    Bitset common = up_[a] & up_[b];
    for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
        if (common.is_subset_of(up_[c]))
            return c;
    }
    throw InvariantBreach("elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " have no join");
}

std::vector<ElementId> FiniteLattice::interval(ElementId a, ElementId b) const {
    std::vector<ElementId> out;
    Bitset members = up_.at(a) & down_.at(b);
    for (auto c = members.find_first(); c != Bitset::npos; c = members.find_next(c))
        out.push_back(c);
    return out;
}

FiniteLattice build_lattice(const LatticePath &nu, const IncrementVector &delta) {
    return FiniteLattice(nu, delta);
}

namespace {

bool restriction_is(const GridTree &tree, Point lo, Point hi, std::size_t expected) {
    std::size_t inside = 0;
    for (Point p : tree.nodes())
        if (p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y)
            ++inside;
    return inside == expected;
}

} // namespace

std::vector<HorizontalL> left_intervals_from(const GridTree &tree, int length) {
    if (length < 1)
        throw ContractError("interval length must be at least 1");
    std::vector<HorizontalL> out;
    const auto k = static_cast<std::size_t>(length) + 1;
    for (int y = 0; y < tree.region().height(); ++y) {
        auto row = tree.row(y);
        if (row.size() < k)
            continue;
        auto p = tree.next_above(row.front());
        if (!p)
            throw InvariantBreach("leftmost node of row " + std::to_string(y) + " has no parent");
        HorizontalL l{*p, std::vector<Point>(row.begin(), row.begin() + static_cast<long>(k))};
        if (!restriction_is(tree, l.q.front(), {l.q.back().x, p->y}, k + 1))
            throw InvariantBreach("horizontal L rectangle in row " + std::to_string(y) +
                                  " holds extra nodes");
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<VerticalL> right_intervals_to(const GridTree &tree, int length) {
    if (length < 1)
        throw ContractError("interval length must be at least 1");
    std::vector<VerticalL> out;
    const auto &region = tree.region();
    const auto order = reduced_column_order(region);
    const auto k = static_cast<std::size_t>(length) + 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<Point> relevant;
        for (Point p : tree.column(order[i]))
            if (!region.is_non_relevant(p))
                relevant.push_back(p);
        if (relevant.size() < k)
            continue;
        std::reverse(relevant.begin(), relevant.end());
        relevant.resize(k);
        auto p = tree.next_left(relevant.front());
        if (!p)
            throw InvariantBreach("top relevant node of a reduced column has no parent");
        Point bottom_left{p->x, relevant.back().y};
        if (!region.contains(bottom_left) || !region.contains(relevant.back()))
            throw InvariantBreach("vertical L rectangle leaves the region");
        if (!restriction_is(tree, bottom_left, relevant.front(), k + 1))
            throw InvariantBreach("vertical L rectangle holds extra nodes");
        out.push_back({*p, std::move(relevant), static_cast<int>(i)});
    }
    return out;
}

GridTree apply_left(const GridTree &tree, const HorizontalL &l) {
    GridTree result = tree;
    for (int k = 0; k < l.length(); ++k)
        result = tree_rotation(result, l.q[static_cast<std::size_t>(k)]);
    return result;
}

GridTree apply_right(const GridTree &tree, const VerticalL &l) {
    GridTree result = tree;
    for (int k = 0; k < l.length(); ++k)
        result = tree_rotation_down(result, l.q[static_cast<std::size_t>(k)]);
    return result;
}

const char *to_string(IntervalKind kind) {
    switch (kind) {
    case IntervalKind::trivial:
        return "trivial";
    case IntervalKind::left:
        return "left";
    case IntervalKind::right:
        return "right";
    case IntervalKind::non_linear:
        return "non-linear";
    }
    return "?";
}

namespace {

void bump(std::vector<std::size_t> &counts, std::size_t length) {
    if (counts.size() <= length)
        counts.resize(length + 1, 0);
    ++counts[length];
}

} // namespace

Census linear_interval_census(const FiniteLattice &lattice) {
    Census census;
    using Key = std::pair<ElementId, ElementId>;
    std::vector<std::set<Key>> left_keys, right_keys;

    for (ElementId id = 0; id < lattice.size(); ++id)
        census.records.push_back({id, id, 0, IntervalKind::trivial, false, {}});
    census.total.push_back(lattice.size());
    census.left.push_back(0);
    census.right.push_back(0);

    std::vector<IntervalRecord> left_records, right_records;
    for (ElementId id = 0; id < lattice.size(); ++id) {
        const GridTree &tree = lattice.tree(id);
        auto rows = row_vector(tree).entries;
        int longest = 0;
        for (int y = 0; y + 1 < static_cast<int>(rows.size()); ++y)
            longest = std::max(longest, rows[static_cast<std::size_t>(y)]);
        for (int length = 1; length <= longest; ++length) {
            for (auto &l : left_intervals_from(tree, length)) {
                ElementId top = lattice.id_of(apply_left(tree, l));
                if (left_keys.size() <= static_cast<std::size_t>(length))
                    left_keys.resize(static_cast<std::size_t>(length) + 1);
                left_keys[static_cast<std::size_t>(length)].insert({id, top});
                left_records.push_back({id, top, length, IntervalKind::left, length == 1, l});
            }
        }
        auto reduced = reduced_column_vector(tree).entries;
        int tallest = reduced.empty() ? 0 : *std::max_element(reduced.begin(), reduced.end());
        for (int length = 1; length <= tallest; ++length) {
            for (auto &l : right_intervals_to(tree, length)) {
                ElementId bottom = lattice.id_of(apply_right(tree, l));
                if (right_keys.size() <= static_cast<std::size_t>(length))
                    right_keys.resize(static_cast<std::size_t>(length) + 1);
                right_keys[static_cast<std::size_t>(length)].insert({bottom, id});
                if (length >= 2)
                    right_records.push_back({bottom, id, length, IntervalKind::right, false, l});
            }
        }
    }

    std::set<Key> cover_keys;
    for (const Cover &c : lattice.covers())
        cover_keys.insert({c.low, c.high});
    const std::set<Key> none;
    const auto &left1 = left_keys.size() > 1 ? left_keys[1] : none;
    const auto &right1 = right_keys.size() > 1 ? right_keys[1] : none;
    if (left1 != cover_keys || right1 != cover_keys)
        throw InvariantBreach("length-one left/right intervals differ from the covers");
    for (std::size_t k = 2; k < std::min(left_keys.size(), right_keys.size()); ++k) {
        for (const Key &key : left_keys[k]) {
            if (right_keys[k].count(key))
                throw InvariantBreach("an interval of length " + std::to_string(k) +
                                      " is both left and right");
        }
    }

    for (auto &rec : left_records) {
        bump(census.left, static_cast<std::size_t>(rec.length));
        if (rec.length == 1)
            bump(census.right, 1);
        bump(census.total, static_cast<std::size_t>(rec.length));
        census.records.push_back(std::move(rec));
    }
    for (auto &rec : right_records) {
        bump(census.right, static_cast<std::size_t>(rec.length));
        bump(census.total, static_cast<std::size_t>(rec.length));
        census.records.push_back(std::move(rec));
    }
    const std::size_t size = census.total.size();
    census.left.resize(size, 0);
    census.right.resize(size, 0);
    return census;
}

namespace {

int longest_chain(const FiniteLattice &lattice, const std::vector<ElementId> &members) {
    // Members are in increasing id order, a linear extension.
    std::map<ElementId, int> depth;
    for (ElementId id : members)
        depth[id] = 0;
    for (ElementId id : members) {
        for (const Cover &c : lattice.covers()) {
            if (c.low == id && depth.count(c.high))
                depth[c.high] = std::max(depth[c.high], depth[id] + 1);
        }
    }
    return depth[members.back()];
}

} // namespace

IntervalRecord classify_interval(const FiniteLattice &lattice, ElementId bottom, ElementId top) {
    if (bottom >= lattice.size() || top >= lattice.size() || !lattice.leq(bottom, top))
        throw ContractError("classify_interval needs bottom <= top");
    IntervalRecord rec{bottom, top, 0, IntervalKind::trivial, false, {}};
    const auto members = lattice.interval(bottom, top);
    if (members.size() == 1)
        return rec;

    bool chain = true;
    for (std::size_t i = 0; i < members.size() && chain; ++i)
        for (std::size_t j = i + 1; j < members.size() && chain; ++j)
            chain = lattice.leq(members[i], members[j]);
    if (!chain) {
        rec.kind = IntervalKind::non_linear;
        rec.length = longest_chain(lattice, members);
        return rec;
    }

    rec.length = static_cast<int>(members.size()) - 1;
    const GridTree &low = lattice.tree(bottom);
    const GridTree &high = lattice.tree(top);
    for (auto &l : left_intervals_from(low, rec.length)) {
        if (apply_left(low, l) == high) {
            rec.kind = IntervalKind::left;
            rec.also_right = rec.length == 1;
            rec.witness = l;
            return rec;
        }
    }
    for (auto &l : right_intervals_to(high, rec.length)) {
        if (apply_right(high, l) == low) {
            rec.kind = IntervalKind::right;
            rec.witness = l;
            return rec;
        }
    }
    throw InvariantBreach("linear interval [" + std::to_string(bottom) + ", " +
                          std::to_string(top) + "] is neither left nor right");
}

std::size_t extension_check(const LatticePath &nu, const IncrementVector &delta_narrow,
                            const IncrementVector &delta_wide) {
    if (!delta_narrow.dominated_by(delta_wide))
        throw ContractError("extension_check needs delta <= delta' componentwise");
    FiniteLattice narrow(nu, delta_narrow);
    FiniteLattice wide(nu, delta_wide);
    std::size_t checked = 0;
    for (ElementId a = 0; a < wide.size(); ++a) {
        const Bitset &above = wide.up_set(a);
        for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
            if (b == a)
                continue;
            if (!narrow.leq(a, b))
                throw InvariantBreach("relation " + std::to_string(a) + " < " + std::to_string(b) +
                                      " is missing from the narrower order");
            ++checked;
        }
    }
    return checked;
}

std::vector<std::pair<ElementId, ElementId>> transitive_reduction(std::span<const Bitset> above) {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId a = 0; a < above.size(); ++a) {
        Bitset implied(above.size());
        for (auto b = above[a].find_first(); b != Bitset::npos; b = above[a].find_next(b))
            implied |= above[b];
        Bitset direct = above[a] - implied;
        for (auto b = direct.find_first(); b != Bitset::npos; b = direct.find_next(b))
            out.emplace_back(a, b);
    }
    return out;
}

} // namespace alttamari
