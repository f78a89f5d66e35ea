#pragma once

#include "alttamari/order.hpp"
#include "alttamari/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alttamari {

/// Phi: the (delta2,nu)-tree with the same row vector as `tree`.
GridTree horizontal_flushing(const GridTree &tree, const IncrementVector &delta2);

/// Psi: the (delta2,nu)-tree with the same reduced column vector as `tree`.
GridTree vertical_flushing(const GridTree &tree, const IncrementVector &delta2);

/// [bottom, bottom + witness].
struct LeftInterval {
    GridTree bottom;
    HorizontalL witness;

    GridTree top() const { return apply_left(bottom, witness); }
};

/// [top - witness, top].
struct RightInterval {
    GridTree top;
    VerticalL witness;

    GridTree bottom() const { return apply_right(top, witness); }
};

/// Image under Phi: the horizontal L of the same length in the same row of
/// the transported bottom tree. Throws ContractError if `interval.witness` is
/// not a horizontal L of `interval.bottom`.
LeftInterval transport_left_interval(const LeftInterval &interval, const IncrementVector &delta2);

/// Image under Psi: the vertical L of the same length in the same reduced
/// column of the transported top tree.
RightInterval transport_right_interval(const RightInterval &interval,
                                       const IncrementVector &delta2);

struct TheoremOptions {
    /// 0 checks the whole box prod [0, nu_i]; otherwise at most this many
    /// vectors, always including the minimal and maximal one.
    std::size_t max_deltas = 0;
    std::uint64_t seed = 0x5eed;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct TheoremReport {
    LatticePath nu;
    std::size_t deltas_checked = 0;
    std::size_t box_size = 0;
    std::vector<std::size_t> census;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    bool all_equal = true;
    /// Set when some delta disagrees with the first one checked.
    std::optional<std::string> counterexample;
};

/// Computes the linear-interval census for every selected delta and compares
/// totals, left counts and right counts.
TheoremReport verify_theorem(const LatticePath &nu, const TheoremOptions &options = {});

/// Census of the bad-check-Tamari order restricted to nu-paths.
struct RestrictedCensus {
    std::size_t size = 0;
    std::size_t minimal_elements = 0;
    std::size_t covers = 0;
    /// True when `bad` equals check_nu(nu, delta) for some valid delta.
    bool valid_check = false;
    std::vector<std::size_t> total;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

/// Throws ContractError unless `bad` is weakly below `nu` with the same
/// endpoints.
RestrictedCensus wrong_check_nu_census(const LatticePath &nu, const LatticePath &bad);

/// (N E^m)^n.
LatticePath mtamari_path(int m, int n);

/// m * binom(mn + n - l, n - l - 1); zero for l >= n.
std::uint64_t mtamari_right_formula(int m, int n, int length);

} // namespace alttamari
