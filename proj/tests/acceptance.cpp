// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "alttamari/errors.hpp"
#include "alttamari/order.hpp"
#include "alttamari/transport.hpp"
#include "alttamari/vectors.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace alttamari;
using namespace testing_support;

namespace {

constexpr int kSweep = 7;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure only; later ones add nothing for diagnosis.
struct Check {
    Outcome out;
    std::size_t checked = 0;

    void expect(bool cond, const std::string &what) {
        ++checked;
        if (!cond && out.ok) {
            out.ok = false;
            out.detail = what;
        }
    }
};

std::string str(const std::vector<std::size_t> &v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

std::string where(const LatticePath &nu, const IncrementVector &delta) {
    return nu.word() + " delta " + delta.to_string();
}

std::size_t at(const std::vector<std::size_t> &v, std::size_t k) { return k < v.size() ? v[k] : 0; }

Outcome small_censuses() {
    Check c;
    const auto a = P("ENEEN");
    for (const auto &delta : {D(a, {0, 0}), D(a, {1, 0}), D(a, {2, 0})}) {
        const auto got = linear_interval_census(build_lattice(a, delta)).total;
        c.expect(got == std::vector<std::size_t>{7, 8, 4, 1}, where(a, delta) + " gave " + str(got));
    }
    const auto b = P("ENEENN");
    for (const auto &delta : {D(b, {0, 0, 0}), D(b, {1, 0, 0}), D(b, {2, 0, 0})}) {
        const auto got = linear_interval_census(build_lattice(b, delta)).total;
        c.expect(got == std::vector<std::size_t>{16, 24, 16, 3}, where(b, delta) + " gave " + str(got));
    }
    if (c.out.ok)
        c.out.detail = "ENEEN (7,8,4,1), ENEENN (16,24,16,3)";
    return c.out;
}

Outcome theorem_sweep() {
    Check c;
    std::size_t bases = 0, instances = 0;
    for (const auto &nu : all_paths_up_to(kSweep)) {
        const auto report = verify_theorem(nu, {.threads = 1});
        ++bases;
        instances += report.deltas_checked;
        c.expect(report.deltas_checked == report.box_size, nu.word() + " box not exhausted");
        c.expect(report.all_equal, nu.word() + ": " + report.counterexample.value_or("mismatch"));
    }
    if (c.out.ok)
        c.out.detail = std::to_string(bases) + " bases, " + std::to_string(instances) +
                       " deltas, total/left/right censuses coincide";
    return c.out;
}

Outcome lattice_law() {
    Check c;
    std::size_t pairs = 0;
    for_each_instance(kSweep, [&](const LatticePath &nu, const IncrementVector &delta) {
        const auto lattice = build_lattice(nu, delta);
        const auto matrix = oracle_matrix(nu, delta);
        for (ElementId a = 0; a < lattice.size(); ++a) {
            for (ElementId b = a; b < lattice.size(); ++b) {
                ++pairs;
                const auto m = oracle::meet(matrix, a, b);
                const auto j = oracle::join(matrix, a, b);
                c.expect(m && j, where(nu, delta) + ": pair without meet or join");
                c.expect(m && lattice.meet(a, b) == *m, where(nu, delta) + ": meet disagrees");
                c.expect(j && lattice.join(a, b) == *j, where(nu, delta) + ": join disagrees");
            }
        }
        const auto check = check_nu(nu, delta);
        const auto big = build_lattice(check, IncrementVector::maximal(check));
        const auto members = big.interval(big.find(nu).value(), big.find(top_path(nu)).value());
        c.expect(members.size() == lattice.size(), where(nu, delta) + ": interval size differs");
        if (members.size() != lattice.size())
            return;
        std::vector<ElementId> map;
        for (ElementId id : members)
            map.push_back(lattice.find(big.element(id).path()).value());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t k = 0; k < members.size(); ++k)
                c.expect(big.leq(members[i], members[k]) == lattice.leq(map[i], map[k]),
                         where(nu, delta) + ": order differs from check-nu interval");
    });
    if (c.out.ok)
        c.out.detail = std::to_string(pairs) + " pairs, every poset is the interval [nu, top]";
    return c.out;
}

Outcome oracle_equivalence() {
    Check c;
    std::size_t instances = 0;
    for_each_instance(kSweep, [&](const LatticePath &nu, const IncrementVector &delta) {
        ++instances;
        const auto census = linear_interval_census(build_lattice(nu, delta)).total;
        const auto scanned = oracle::census(oracle_matrix(nu, delta));
        c.expect(census == scanned, where(nu, delta) + ": " + str(census) + " vs " + str(scanned));
    });
    if (c.out.ok)
        c.out.detail = std::to_string(instances) + " instances agree with the chain scan";
    return c.out;
}

Outcome counting_propositions() {
    Check c;
    std::size_t trees = 0;
    for_each_instance(kSweep, [&](const LatticePath &nu, const IncrementVector &delta) {
        const auto lattice = build_lattice(nu, delta);
        const auto matrix = oracle_matrix(nu, delta);
        // Linear intervals starting (ending) at each element, per length.
        std::vector<std::vector<std::size_t>> up(lattice.size()), down(lattice.size());
        for (const auto &l : oracle::linear_intervals(matrix)) {
            const auto k = static_cast<std::size_t>(l.length);
            for (auto *v : {&up[l.bottom], &down[l.top]}) {
                if (v->size() <= k)
                    v->resize(k + 1, 0);
                ++(*v)[k];
            }
        }
        for (ElementId id = 0; id < lattice.size(); ++id) {
            ++trees;
            const auto &tree = lattice.tree(id);
            const auto r = row_vector(tree).entries;
            const auto cbar = reduced_column_vector(tree).entries;
            for (int l = 1; l <= nu.length(); ++l) {
                std::size_t want_left = 0, want_right = 0;
                for (std::size_t i = 0; i + 1 < r.size(); ++i)
                    want_left += r[i] >= l;
                for (int v : cbar)
                    want_right += v >= l;
                const auto lefts = left_intervals_from(tree, l);
                const auto rights = right_intervals_to(tree, l);
                c.expect(lefts.size() == want_left, where(nu, delta) + ": left count");
                c.expect(rights.size() == want_right, where(nu, delta) + ": right count");
                for (const auto &h : lefts) {
                    const auto lin = oracle::is_linear(matrix, id, lattice.id_of(apply_left(tree, h)));
                    c.expect(lin.linear && lin.length == l, where(nu, delta) + ": left witness");
                }
                for (const auto &v : rights) {
                    const auto lin = oracle::is_linear(matrix, lattice.id_of(apply_right(tree, v)), id);
                    c.expect(lin.linear && lin.length == l, where(nu, delta) + ": right witness");
                }
                // At length one the L's account for every cover.
                const auto k = static_cast<std::size_t>(l);
                if (l == 1) {
                    c.expect(at(up[id], k) == want_left, where(nu, delta) + ": covers above");
                    c.expect(at(down[id], k) == want_right, where(nu, delta) + ": covers below");
                }
            }
        }
    });
    if (c.out.ok)
        c.out.detail = std::to_string(trees) + " trees match the row and reduced-column counts";
    return c.out;
}

Outcome flushing_round_trips() {
    Check c;
    std::size_t maps = 0;
    for (const auto &nu : all_paths_up_to(kSweep)) {
        const auto deltas = all_increment_vectors(nu);
        const auto mus = enumerate_nu_paths(nu);
        for (const auto &d1 : deltas) {
            const auto region = build_region(nu, d1);
            std::vector<GridTree> trees;
            for (const auto &mu : mus) {
                trees.push_back(right_flushing(mu, region));
                c.expect(left_flushing(trees.back()) == mu, where(nu, d1) + ": left after right");
                c.expect(right_flushing(left_flushing(trees.back()), region) == trees.back(),
                         where(nu, d1) + ": right after left");
                c.expect(down_flushing(column_vector(trees.back()), region) == trees.back(),
                         where(nu, d1) + ": down flushing");
                c.expect(reduced_down_flushing(reduced_column_vector(trees.back()), region) == trees.back(),
                         where(nu, d1) + ": reduced down flushing");
            }
            for (const auto &d2 : deltas) {
                std::set<std::vector<int>> h_rows;
                std::set<std::vector<Point>> h_seen, v_seen;
                for (const auto &tree : trees) {
                    ++maps;
                    const auto h = horizontal_flushing(tree, d2);
                    const auto v = vertical_flushing(tree, d2);
                    c.expect(row_vector(h) == row_vector(tree), where(nu, d1) + ": Phi vector");
                    c.expect(reduced_column_vector(v) == reduced_column_vector(tree),
                             where(nu, d1) + ": Psi vector");
                    c.expect(horizontal_flushing(h, d1) == tree, where(nu, d1) + ": Phi inverse");
                    c.expect(vertical_flushing(v, d1) == tree, where(nu, d1) + ": Psi inverse");
                    h_seen.insert({h.nodes().begin(), h.nodes().end()});
                    v_seen.insert({v.nodes().begin(), v.nodes().end()});
                }
                c.expect(h_seen.size() == trees.size() && v_seen.size() == trees.size(),
                         where(nu, d1) + ": flushing not injective");
            }
        }
    }
    if (c.out.ok)
        c.out.detail = std::to_string(maps) + " tree transports, all round trips hold";
    return c.out;
}

Outcome mtamari_formula() {
    Check c;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const auto nu = mtamari_path(m, n);
        const auto census = linear_interval_census(build_lattice(nu, IncrementVector::maximal(nu)));
        for (int l = 1; l <= n * (m + 1); ++l) {
            const auto got = at(census.right, static_cast<std::size_t>(l));
            const auto want = mtamari_right_formula(m, n, l);
            c.expect(got == want, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " l=" +
                                      std::to_string(l) + ": " + std::to_string(got) + " vs " +
                                      std::to_string(want));
        }
    }
    if (c.out.ok)
        c.out.detail = "right counts equal m*C(mn+n-l, n-l-1) for all six (m,n)";
    return c.out;
}

Outcome mtamari_left_distribution() {
    const std::vector<std::size_t> expected{728, 442, 222, 112, 47, 18, 5, 1};
    const auto nu = mtamari_path(2, 5);
    const auto lattice = build_lattice(nu, IncrementVector::maximal(nu));
    const auto left = linear_interval_census(lattice).left;
    // The distribution is given without lengths; find where it sits.
    for (std::size_t offset = 0; offset + expected.size() <= left.size() + 1; ++offset) {
        bool match = true;
        for (std::size_t i = 0; i < expected.size(); ++i)
            match = match && at(left, offset + i) == expected[i];
        for (std::size_t k = offset + expected.size(); k < left.size(); ++k)
            match = match && left[k] == 0;
        if (match)
            return {true, std::to_string(lattice.size()) + " elements, left counts " + str(expected) +
                              " at lengths " + std::to_string(offset) + ".." +
                              std::to_string(offset + expected.size() - 1)};
    }
    return {false, "left census " + str(left) + " does not contain " + str(expected)};
}

Outcome dyck_marked_paths() {
    Check c;
    std::size_t bases = 0;
    for (const auto &nu : all_paths_up_to(8)) {
        ++bases;
        const auto census = linear_interval_census(build_lattice(nu, IncrementVector::minimal(nu)));
        for (int l = 1; l <= nu.length(); ++l) {
            const auto [left, right] = oracle::dyck_marked_counts(runs(nu), l);
            const auto k = static_cast<std::size_t>(l);
            c.expect(left == at(census.left, k) && right == at(census.right, k),
                     nu.word() + " length " + std::to_string(l));
        }
    }
    if (c.out.ok)
        c.out.detail = std::to_string(bases) + " bases, marked paths equal the Dyck censuses";
    return c.out;
}

Outcome wrong_check_nu() {
    std::size_t pairs = 0;
    for (const auto &nu : all_paths_up_to(kSweep)) {
        const auto census = linear_interval_census(build_lattice(nu, IncrementVector::maximal(nu)));
        for (const auto &bad : all_paths_up_to(nu.length())) {
            if (bad.width() != nu.width() || bad.height() != nu.height() || !nu.is_weakly_above(bad))
                continue;
            const auto r = wrong_check_nu_census(nu, bad);
            if (r.valid_check)
                continue;
            ++pairs;
            if (r.left != census.left)
                continue;
            bool fewer = r.right.size() <= census.right.size();
            bool strict = false;
            for (std::size_t k = 0; fewer && k < census.right.size(); ++k) {
                fewer = at(r.right, k) <= census.right[k];
                strict = strict || at(r.right, k) < census.right[k];
            }
            if (fewer && strict)
                return {true, "nu " + nu.composition_string() + " with " + bad.composition_string() +
                                  ": right " + str(r.right) + " < " + str(census.right) +
                                  ", left " + str(r.left) + " equal"};
        }
    }
    return {false, "none of " + std::to_string(pairs) + " invalid pairs has fewer right intervals"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"small-case censuses", small_censuses},
        {"equal censuses across every delta", theorem_sweep},
        {"lattice law and check-nu interval", lattice_law},
        {"structured census equals chain scan", oracle_equivalence},
        {"per-tree counting", counting_propositions},
        {"flushing round trips", flushing_round_trips},
        {"m-Tamari right formula", mtamari_formula},
        {"m-Tamari left distribution", mtamari_left_distribution},
        {"Dyck marked paths", dyck_marked_paths},
        {"wrong check-nu has fewer right intervals", wrong_check_nu},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        failures += !out.ok;
        std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << criteria[i].first << " (" << out.detail << ", " << took.count() << " s)"
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
