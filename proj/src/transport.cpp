#include "alttamari/transport.hpp"

#include "alttamari/errors.hpp"
#include "alttamari/vectors.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <mutex>
#include <thread>

namespace alttamari {

namespace {

void require_same_base(const GridTree &tree, const IncrementVector &delta2) {
    if (!(delta2.bound() == tree.region().nu()))
        throw ContractError("target increment vector belongs to a different base path");
}

std::string join(const std::vector<std::size_t> &xs) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << xs[i];
    out << ')';
    return out.str();
}

} // namespace

GridTree horizontal_flushing(const GridTree &tree, const IncrementVector &delta2) {
    require_same_base(tree, delta2);
    if (tree.region().delta() == delta2)
        return tree;
    return right_flushing(left_flushing(tree), build_region(tree.region().nu(), delta2));
}

GridTree vertical_flushing(const GridTree &tree, const IncrementVector &delta2) {
    require_same_base(tree, delta2);
    if (tree.region().delta() == delta2)
        return tree;
    return reduced_down_flushing(reduced_column_vector(tree),
                                 build_region(tree.region().nu(), delta2));
}

LeftInterval transport_left_interval(const LeftInterval &interval, const IncrementVector &delta2) {
    const int length = interval.witness.length();
    if (length < 1)
        throw ContractError("left interval witness has length zero");
    const auto source = left_intervals_from(interval.bottom, length);
    if (std::find(source.begin(), source.end(), interval.witness) == source.end())
        throw ContractError("witness is not a horizontal L of the bottom tree");
    GridTree image = horizontal_flushing(interval.bottom, delta2);
    for (auto &l : left_intervals_from(image, length)) {
        if (l.row() == interval.witness.row())
            return {std::move(image), std::move(l)};
    }
    throw InvariantBreach("no horizontal L of length " + std::to_string(length) + " in row " +
                          std::to_string(interval.witness.row()) + " after transport");
}

RightInterval transport_right_interval(const RightInterval &interval,
                                       const IncrementVector &delta2) {
    const int length = interval.witness.length();
    if (length < 1)
        throw ContractError("right interval witness has length zero");
    const auto source = right_intervals_to(interval.top, length);
    if (std::find(source.begin(), source.end(), interval.witness) == source.end())
        throw ContractError("witness is not a vertical L of the top tree");
    GridTree image = vertical_flushing(interval.top, delta2);
    for (auto &l : right_intervals_to(image, length)) {
        if (l.reduced_column == interval.witness.reduced_column)
            return {std::move(image), std::move(l)};
    }
    throw InvariantBreach("no vertical L of length " + std::to_string(length) +
                          " in reduced column " + std::to_string(interval.witness.reduced_column) +
                          " after transport");
}

namespace {

std::vector<IncrementVector> select_deltas(const LatticePath &nu, const TheoremOptions &options,
                                           std::size_t &box_size) {
    long double box = 1;
    for (int i = 1; i <= nu.height(); ++i)
        box *= nu.run(i) + 1;
    const bool exhaustive = options.max_deltas == 0 || box <= options.max_deltas;
    box_size = box > 1e18L ? SIZE_MAX : static_cast<std::size_t>(box);
    if (exhaustive)
        return all_increment_vectors(nu);

    std::set<std::vector<int>> chosen;
    auto low = IncrementVector::minimal(nu), high = IncrementVector::maximal(nu);
    chosen.emplace(low.entries().begin(), low.entries().end());
    chosen.emplace(high.entries().begin(), high.entries().end());
    std::mt19937_64 rng(options.seed);
    while (chosen.size() < std::max<std::size_t>(options.max_deltas, 2)) {
        std::vector<int> d;
        for (int i = 1; i <= nu.height(); ++i)
            d.push_back(std::uniform_int_distribution<int>(0, nu.run(i))(rng));
        chosen.insert(std::move(d));
    }
    std::vector<IncrementVector> out;
    for (const auto &d : chosen)
        out.emplace_back(d, nu);
    return out;
}

} // namespace

TheoremReport verify_theorem(const LatticePath &nu, const TheoremOptions &options) {
    TheoremReport report;
    report.nu = nu;
    const auto deltas = select_deltas(nu, options, report.box_size);

    std::vector<Census> censuses(deltas.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < deltas.size();) {
            try {
                Census c = linear_interval_census(FiniteLattice(nu, deltas[i]));
                c.records.clear();
                censuses[i] = std::move(c);
            } catch (...) {
                std::lock_guard guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(deltas.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    report.deltas_checked = deltas.size();
    report.census = censuses.front().total;
    report.left = censuses.front().left;
    report.right = censuses.front().right;
    for (std::size_t i = 1; i < censuses.size(); ++i) {
        if (censuses[i].same_counts(censuses.front()))
            continue;
        report.all_equal = false;
        report.counterexample = "delta " + deltas[i].to_string() + " gives census " +
                                join(censuses[i].total) + " left " + join(censuses[i].left) +
                                " right " + join(censuses[i].right) + " but delta " +
                                deltas.front().to_string() + " gives " + join(report.census) +
                                " left " + join(report.left) + " right " + join(report.right);
        break;
    }
    return report;
}

RestrictedCensus wrong_check_nu_census(const LatticePath &nu, const LatticePath &bad) {
    if (!nu.is_weakly_above(bad))
        throw ContractError("path " + bad.word() + " is not weakly below " + nu.word());
    RestrictedCensus out;
    out.valid_check = true;
    for (int i = 1; i <= nu.height(); ++i)
        out.valid_check = out.valid_check && bad.run(i) <= nu.run(i);

    FiniteLattice full(bad, IncrementVector::maximal(bad));
    std::vector<bool> member(full.size(), false);
    std::vector<ElementId> ids;
    for (ElementId id = 0; id < full.size(); ++id) {
        if (full.element(id).path().is_weakly_above(nu)) {
            member[id] = true;
            ids.push_back(id);
        }
    }
    out.size = ids.size();

    // The subset is an upper set, so its intervals are intervals of the full
    // lattice; recompute covers among members anyway.
    std::vector<std::size_t> local(full.size(), SIZE_MAX);
    for (std::size_t k = 0; k < ids.size(); ++k)
        local[ids[k]] = k;
    std::vector<Bitset> above(ids.size(), Bitset(ids.size()));
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const Bitset &up = full.up_set(ids[k]);
        for (auto b = up.find_first(); b != Bitset::npos; b = up.find_next(b)) {
            if (!member[b])
                throw InvariantBreach("restricted subset is not an upper set");
            if (b != ids[k])
                above[k].set(local[b]);
        }
    }
    const auto reduced = transitive_reduction(above);
    out.covers = reduced.size();
    std::vector<bool> has_lower(ids.size(), false);
    for (auto [a, b] : reduced)
        has_lower[b] = true;
    out.minimal_elements =
        static_cast<std::size_t>(std::count(has_lower.begin(), has_lower.end(), false));

    const Census census = linear_interval_census(full);
    auto bump = [](std::vector<std::size_t> &v, std::size_t k) {
        if (v.size() <= k)
            v.resize(k + 1, 0);
        ++v[k];
    };
    for (const auto &rec : census.records) {
        if (!member[rec.bottom])
            continue;
        const auto k = static_cast<std::size_t>(rec.length);
        bump(out.total, k);
        if (rec.kind == IntervalKind::left)
            bump(out.left, k);
        if (rec.kind == IntervalKind::right || rec.also_right)
            bump(out.right, k);
    }
    if (out.total.size() > 1 && out.total[1] != out.covers)
        throw InvariantBreach("restricted covers disagree with length-one intervals");
    out.left.resize(out.total.size(), 0);
    out.right.resize(out.total.size(), 0);
    return out;
}

LatticePath mtamari_path(int m, int n) {
    if (m < 0 || n < 0)
        throw ValidationError("m-Tamari parameters must be non-negative");
    std::vector<int> runs(static_cast<std::size_t>(n) + 1, m);
    runs[0] = 0;
    return LatticePath::from_composition(std::move(runs));
}

std::uint64_t mtamari_right_formula(int m, int n, int length) {
    const int top = m * n + n - length;
    const int bottom = n - length - 1;
    if (bottom < 0 || top < bottom)
        return 0;
    std::uint64_t c = 1;
    for (int k = 1; k <= bottom; ++k)
        c = c * static_cast<std::uint64_t>(top - bottom + k) / static_cast<std::uint64_t>(k);
    return static_cast<std::uint64_t>(m) * c;
}

} // namespace alttamari
