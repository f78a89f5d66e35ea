#pragma once

#include "alttamari/order.hpp"
#include "alttamari/path.hpp"
#include "alttamari/tree.hpp"

#include "oracle.hpp"

#include <functional>
#include <string>
#include <vector>

namespace testing_support {

using namespace alttamari;

inline LatticePath P(const std::string &text) { return parse_path(text); }

inline IncrementVector D(const LatticePath &nu, std::vector<int> entries) {
    return IncrementVector(std::move(entries), nu);
}

inline std::vector<int> runs(const LatticePath &path) {
    return {path.composition().begin(), path.composition().end()};
}

inline std::vector<int> entries(const IncrementVector &delta) {
    return {delta.entries().begin(), delta.entries().end()};
}

/// Composition written without separators, as in 120 for (1,2,0).
inline std::string label(const LatticePath &path) {
    std::string s;
    for (int r : path.composition())
        s += std::to_string(r);
    return s;
}

/// Calls fn(nu, delta) for every nu with at most `max_size` steps and every
/// increment vector of nu.
inline void for_each_instance(int max_size,
                              const std::function<void(const LatticePath &,
                                                       const IncrementVector &)> &fn) {
    for (const auto &nu : all_paths_up_to(max_size))
        for (const auto &delta : all_increment_vectors(nu))
            fn(nu, delta);
}

inline oracle::RelationMatrix oracle_matrix(const LatticePath &nu, const IncrementVector &delta) {
    auto poset = oracle::rotation_poset(runs(nu), entries(delta));
    return oracle::order_from_covers(poset.elements.size(), poset.covers);
}

/// Trees of all elements of the lattice, via right flushing.
inline std::vector<GridTree> all_trees(const LatticePath &nu, const IncrementVector &delta) {
    auto region = build_region(nu, delta);
    std::vector<GridTree> out;
    for (const auto &mu : enumerate_nu_paths(nu))
        out.push_back(right_flushing(mu, region));
    return out;
}

} // namespace testing_support
