#include "alttamari/errors.hpp"
#include "alttamari/io.hpp"
#include "alttamari/order.hpp"
#include "alttamari/transport.hpp"
#include "alttamari/vectors.hpp"

#include "oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace alttamari;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kBreach = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string nu;
    std::string delta;
    std::string delta2;
    std::string path;
    std::string tree;
    std::string direction = "h";
    std::string format;
    std::string out;
    int max_size = -1;
    std::size_t sample = 0;
    std::uint64_t seed = 0x5eed;
    int m = 2;
    int n = 3;
};

LatticePath read_nu(const Options &o) {
    try {
        return parse_path(o.nu);
    } catch (const ParseError &e) {
        throw UsageError(std::string("--nu: ") + e.what());
    }
}

IncrementVector read_delta(const std::string &text, const LatticePath &nu, const char *flag) {
    try {
        if (text.empty() && nu.height() > 0)
            return IncrementVector::maximal(nu);
        return parse_increment(text, nu);
    } catch (const ParseError &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    } catch (const ValidationError &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string join(const std::vector<std::size_t> &xs) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << xs[i];
    out << ')';
    return out.str();
}


void emit(const Options &o, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file)
        throw UsageError("cannot write " + o.out);
    file << text;
}

int cmd_paths(const Options &o) {
    const auto nu = read_nu(o);
    std::ostringstream out;
    const auto paths = enumerate_nu_paths(nu);
    for (std::size_t id = 0; id < paths.size(); ++id)
        out << id << ' ' << paths[id].path().word() << ' ' << paths[id].path().composition_string()
            << '\n';
    emit(o, out.str());
    return kOk;
}

int cmd_lattice(const Options &o) {
    const auto nu = read_nu(o);
    const auto delta = read_delta(o.delta, nu, "--delta");
    FiniteLattice lattice(nu, delta);
    if (o.format == "dot") {
        emit(o, lattice_to_dot(lattice));
    } else if (o.format.empty() || o.format == "json") {
        emit(o, lattice_to_json(lattice, linear_interval_census(lattice)).dump(2) + "\n");
    } else {
        throw UsageError("lattice supports --format dot or json");
    }
    return kOk;
}

int cmd_census(const Options &o) {
    const auto nu = read_nu(o);
    const auto delta = read_delta(o.delta, nu, "--delta");
    const Census census = linear_interval_census(FiniteLattice(nu, delta));
    if (o.format == "json") {
        Json doc{{"nu", nu.word()},
                 {"delta", std::vector<int>(delta.entries().begin(), delta.entries().end())},
                 {"census", census.total},
                 {"left", census.left},
                 {"right", census.right}};
        emit(o, doc.dump(2) + "\n");
    } else {
        emit(o, "census " + join(census.total) + "\n" + census_table(census));
    }
    return kOk;
}

// Lattice law and oracle agreement for one instance; returns a failure
// description or an empty string.
std::string sweep_instance(const LatticePath &nu, const IncrementVector &delta) {
    FiniteLattice lattice(nu, delta);
    for (ElementId a = 0; a < lattice.size(); ++a) {
        for (ElementId b = a; b < lattice.size(); ++b) {
            lattice.meet(a, b);
            lattice.join(a, b);
        }
    }
    const Census census = linear_interval_census(lattice);
    const std::vector<int> runs(nu.composition().begin(), nu.composition().end());
    const std::vector<int> d(delta.entries().begin(), delta.entries().end());
    auto poset = oracle::rotation_poset(runs, d);
    auto expected = oracle::census(oracle::order_from_covers(poset.elements.size(), poset.covers));
    if (expected != census.total)
        return "oracle census " + join(expected) + " differs from " + join(census.total);
    return {};
}

int cmd_verify(const Options &o) {
    std::ostringstream out;
    if (o.max_size < 0) {
        if (o.nu.empty() && o.max_size < 0)
            throw UsageError("verify needs --nu or --max-size");
        const auto nu = read_nu(o);
        TheoremReport report = verify_theorem(nu, {o.sample, o.seed, 0});
        if (o.format == "json") {
            out << report_to_json(report).dump(2) << '\n';
        } else {
            out << report.deltas_checked << " deltas, census " << join(report.census)
                << (report.all_equal ? ", all equal" : ", MISMATCH") << '\n';
            out << "left " << join(report.left) << " right " << join(report.right) << '\n';
            if (report.counterexample)
                out << *report.counterexample << '\n';
        }
        emit(o, out.str());
        return report.all_equal ? kOk : kBreach;
    }

    std::size_t bases = 0, instances = 0;
    bool ok = true;
    for (const LatticePath &nu : all_paths_up_to(o.max_size)) {
        ++bases;
        TheoremReport report = verify_theorem(nu, {o.sample, o.seed, 0});
        if (!report.all_equal) {
            ok = false;
            out << nu.word() << ": " << *report.counterexample << '\n';
        }
        for (const auto &delta : all_increment_vectors(nu)) {
            ++instances;
            if (auto failure = sweep_instance(nu, delta); !failure.empty()) {
                ok = false;
                out << nu.word() << " delta " << delta.to_string() << ": " << failure << '\n';
            }
        }
    }
    out << bases << " base paths, " << instances << " instances, "
        << (ok ? "all checks passed" : "FAILURES") << '\n';
    emit(o, out.str());
    return ok ? kOk : kBreach;
}

int cmd_flush(const Options &o) {
    const auto nu = read_nu(o);
    const auto delta = read_delta(o.delta, nu, "--delta");
    if (o.path.empty() == o.tree.empty())
        throw UsageError("flush needs exactly one of --path and --tree");
    if (!o.path.empty()) {
        LatticePath mu;
        try {
            mu = parse_path(o.path);
        } catch (const ParseError &e) {
            throw UsageError(std::string("--path: ") + e.what());
        }
        GridTree tree = right_flushing(NuPath(mu, nu), build_region(nu, delta));
        emit(o, tree_to_json(tree).dump(2) + "\n");
        return kOk;
    }
    std::ifstream file(o.tree);
    if (!file)
        throw UsageError("cannot read " + o.tree);
    Json doc;
    try {
        doc = Json::parse(file);
    } catch (const Json::exception &e) {
        throw ValidationError(std::string("tree file is not JSON: ") + e.what());
    }
    GridTree tree = tree_from_json(doc);
    if (!(tree.region().nu() == nu) || !(tree.region().delta() == delta))
        throw ValidationError("tree file was built for a different nu or delta");
    const NuPath mu = left_flushing(tree);
    Json result{{"nu", nu.word()}, {"path", mu.path().word()},
                {"composition", mu.path().composition_string()}};
    emit(o, result.dump(2) + "\n");
    return kOk;
}

int cmd_transport(const Options &o) {
    const auto nu = read_nu(o);
    const auto delta = read_delta(o.delta, nu, "--delta");
    const auto delta2 = read_delta(o.delta2, nu, "--delta2");
    LatticePath mu;
    try {
        mu = parse_path(o.path.empty() ? o.nu : o.path);
    } catch (const ParseError &e) {
        throw UsageError(std::string("--path: ") + e.what());
    }
    GridTree source = right_flushing(NuPath(mu, nu), build_region(nu, delta));
    Json doc{{"source", tree_to_json(source)}};
    if (o.direction == "h" || o.direction == "horizontal") {
        GridTree target = horizontal_flushing(source, delta2);
        if (row_vector(target) != row_vector(source))
            throw InvariantBreach("horizontal flushing changed the row vector");
        doc["target"] = tree_to_json(target);
        doc["preserved"] = {{"kind", "row"}, {"vector", row_vector(source).entries}};
    } else if (o.direction == "v" || o.direction == "vertical") {
        GridTree target = vertical_flushing(source, delta2);
        if (reduced_column_vector(target) != reduced_column_vector(source))
            throw InvariantBreach("vertical flushing changed the reduced column vector");
        doc["target"] = tree_to_json(target);
        doc["preserved"] = {{"kind", "reduced_column"},
                            {"vector", reduced_column_vector(source).entries}};
    } else {
        throw UsageError("--direction must be h or v");
    }
    emit(o, doc.dump(2) + "\n");
    return kOk;
}

int cmd_mtamari(const Options &o) {
    if (o.m < 1 || o.n < 1)
        throw UsageError("mtamari-check needs m >= 1 and n >= 1");
    const LatticePath nu = mtamari_path(o.m, o.n);
    const Census census = linear_interval_census(FiniteLattice(nu, IncrementVector::maximal(nu)));
    std::ostringstream out;
    out << "nu " << nu.word() << ", " << census.total[0] << " elements\n";
    out << "length  right  formula  left\n";
    bool ok = true;
    const std::size_t top = std::max<std::size_t>(census.total.size(), static_cast<std::size_t>(o.n));
    for (std::size_t k = 1; k < top; ++k) {
        const std::size_t right = k < census.right.size() ? census.right[k] : 0;
        const std::size_t left = k < census.left.size() ? census.left[k] : 0;
        const auto formula = mtamari_right_formula(o.m, o.n, static_cast<int>(k));
        ok = ok && right == formula;
        out << k << "  " << right << "  " << formula << "  " << left << '\n';
    }
    out << (ok ? "right-interval formula holds" : "right-interval formula FAILS") << '\n';
    emit(o, out.str());
    return ok ? kOk : kBreach;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Alt nu-Tamari lattices: construction, trees and linear intervals"};
    app.require_subcommand(1);
    Options o;

    auto add_nu = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("--nu", o.nu, "base path, word (ENEEN) or composition (1,2,0)");
        if (required)
            opt->required();
    };
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", o.out, "write output to this file");
    };

    auto *paths = app.add_subcommand("paths", "list nu-paths in canonical order");
    add_nu(paths, true);
    add_common(paths);

    auto *lattice = app.add_subcommand("lattice", "export the lattice as DOT or JSON");
    add_nu(lattice, true);
    lattice->add_option("--delta", o.delta, "increment vector, default delta max");
    lattice->add_option("--format", o.format, "dot or json");
    add_common(lattice);

    auto *census = app.add_subcommand("census", "count linear intervals by length");
    add_nu(census, true);
    census->add_option("--delta", o.delta, "increment vector, default delta max");
    census->add_option("--format", o.format, "text or json");
    add_common(census);

    auto *verify = app.add_subcommand("verify", "check equal censuses across all delta");
    add_nu(verify, false);
    verify->add_option("--max-size", o.max_size, "sweep every nu with m + n <= S");
    verify->add_option("--sample", o.sample, "check at most this many delta per nu");
    verify->add_option("--seed", o.seed, "seed for delta sampling");
    verify->add_option("--format", o.format, "text or json");
    add_common(verify);

    auto *flush = app.add_subcommand("flush", "path to tree or tree to path");
    add_nu(flush, true);
    flush->add_option("--delta", o.delta, "increment vector, default delta max");
    flush->add_option("--path", o.path, "nu-path to right-flush");
    flush->add_option("--tree", o.tree, "tree JSON file to left-flush");
    add_common(flush);

    auto *transport = app.add_subcommand("transport", "move a tree from delta to delta2");
    add_nu(transport, true);
    transport->add_option("--delta", o.delta, "source increment vector")->required();
    transport->add_option("--delta2", o.delta2, "target increment vector")->required();
    transport->add_option("--path", o.path, "nu-path giving the source tree, default nu");
    transport->add_option("--direction", o.direction, "h (row vector) or v (reduced columns)");
    add_common(transport);

    auto *mtamari = app.add_subcommand("mtamari-check", "right-interval formula for (N E^m)^n");
    mtamari->add_option("-m", o.m, "east steps per north step");
    mtamari->add_option("-n", o.n, "number of north steps");
    add_common(mtamari);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*paths)
            return cmd_paths(o);
        if (*lattice)
            return cmd_lattice(o);
        if (*census)
            return cmd_census(o);
        if (*verify)
            return cmd_verify(o);
        if (*flush)
            return cmd_flush(o);
        if (*transport)
            return cmd_transport(o);
        if (*mtamari)
            return cmd_mtamari(o);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError &e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const ContractError &e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const InvariantBreach &e) {
        std::cerr << "invariant breach: " << e.what() << '\n';
        return kBreach;
    }
    return kUsage;
}
