#include "alttamari/errors.hpp"
#include "alttamari/io.hpp"
#include "alttamari/order.hpp"
#include "alttamari/transport.hpp"
#include "alttamari/vectors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace alttamari;

namespace {

using Delta = std::optional<std::vector<int>>;
using Nodes = std::vector<std::pair<int, int>>;

// Paths come in as words or composition literals; delta defaults to the
// maximal vector, which gives the nu-Tamari lattice.
IncrementVector to_delta(const LatticePath &nu, const Delta &delta) {
    return delta ? IncrementVector(*delta, nu) : IncrementVector::maximal(nu);
}

py::dict census_dict(const Census &c) {
    py::dict d;
    d["total"] = c.total;
    d["left"] = c.left;
    d["right"] = c.right;
    return d;
}

Nodes nodes_of(const GridTree &tree) {
    Nodes out;
    for (Point p : tree.nodes())
        out.emplace_back(p.x, p.y);
    return out;
}

GridTree tree_of(const std::string &nu_text, const Delta &delta, const Nodes &nodes) {
    const auto nu = parse_path(nu_text);
    std::vector<Point> pts;
    for (auto [x, y] : nodes)
        pts.push_back({x, y});
    return GridTree(build_region(nu, to_delta(nu, delta)), std::move(pts));
}

GridTree flushed(const std::string &nu_text, const Delta &delta, const std::string &path) {
    const auto nu = parse_path(nu_text);
    return right_flushing(NuPath(parse_path(path), nu), build_region(nu, to_delta(nu, delta)));
}

} // namespace

PYBIND11_MODULE(alttamari, m) {
    m.doc() = "Alt nu-Tamari lattices: nu-paths, (delta,nu)-trees and linear intervals.";

    auto base = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    auto contract = py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);
    py::register_exception<RotationLeavesRegion>(m, "RotationLeavesRegion", contract.ptr());
    py::register_exception<InvariantBreach>(m, "InvariantBreach", PyExc_RuntimeError);

    m.def("paths", [](const std::string &nu) {
        std::vector<std::string> out;
        for (const auto &mu : enumerate_nu_paths(parse_path(nu)))
            out.push_back(mu.path().word());
        return out;
    }, py::arg("nu"), "nu-paths in canonical order, nu first.");

    m.def("composition", [](const std::string &path) {
        const auto p = parse_path(path);
        return std::vector<int>(p.composition().begin(), p.composition().end());
    }, py::arg("path"));

    m.def("check_nu", [](const std::string &nu_text, const Delta &delta) {
        const auto nu = parse_path(nu_text);
        return check_nu(nu, to_delta(nu, delta)).word();
    }, py::arg("nu"), py::arg("delta") = py::none());

    py::class_<FiniteLattice>(m, "Lattice")
        .def(py::init([](const std::string &nu_text, const Delta &delta) {
                 const auto nu = parse_path(nu_text);
                 return build_lattice(nu, to_delta(nu, delta));
             }),
             py::arg("nu"), py::arg("delta") = py::none())
        .def("__len__", &FiniteLattice::size)
        .def_property_readonly("nu", [](const FiniteLattice &l) { return l.nu().word(); })
        .def_property_readonly("delta", [](const FiniteLattice &l) {
            return std::vector<int>(l.delta().entries().begin(), l.delta().entries().end());
        })
        .def_property_readonly("elements", [](const FiniteLattice &l) {
            std::vector<std::string> out;
            for (const auto &mu : l.elements())
                out.push_back(mu.path().word());
            return out;
        })
        .def_property_readonly("covers", [](const FiniteLattice &l) {
            std::vector<std::pair<ElementId, ElementId>> out;
            for (const Cover &c : l.covers())
                out.emplace_back(c.low, c.high);
            return out;
        })
        .def("find", [](const FiniteLattice &l, const std::string &path) {
            return l.find(parse_path(path));
        })
        .def("leq", &FiniteLattice::leq)
        .def("meet", &FiniteLattice::meet)
        .def("join", &FiniteLattice::join)
        .def("interval", &FiniteLattice::interval)
        .def("tree", [](const FiniteLattice &l, ElementId id) { return nodes_of(l.tree(id)); })
        .def("census", [](const FiniteLattice &l) { return census_dict(linear_interval_census(l)); })
        .def("classify", [](const FiniteLattice &l, ElementId bottom, ElementId top) {
            const auto rec = classify_interval(l, bottom, top);
            return py::make_tuple(to_string(rec.kind), rec.length);
        })
        .def("to_json", [](const FiniteLattice &l) {
            return lattice_to_json(l, linear_interval_census(l)).dump();
        })
        .def("to_dot", &lattice_to_dot);

    m.def("census", [](const std::string &nu_text, const Delta &delta) {
        const auto nu = parse_path(nu_text);
        return census_dict(linear_interval_census(build_lattice(nu, to_delta(nu, delta))));
    }, py::arg("nu"), py::arg("delta") = py::none());

    m.def("verify", [](const std::string &nu, std::size_t max_deltas, std::uint64_t seed,
                       unsigned threads) {
        TheoremReport report;
        {
            py::gil_scoped_release release;
            report = verify_theorem(parse_path(nu), {max_deltas, seed, threads});
        }
        py::dict d;
        d["deltas_checked"] = report.deltas_checked;
        d["box_size"] = report.box_size;
        d["total"] = report.census;
        d["left"] = report.left;
        d["right"] = report.right;
        d["all_equal"] = report.all_equal;
        d["counterexample"] = report.counterexample;
        return d;
    }, py::arg("nu"), py::arg("max_deltas") = 0, py::arg("seed") = 0x5eed, py::arg("threads") = 0,
       "Compares censuses over the increment vectors of nu.");

    m.def("right_flushing", [](const std::string &nu, const Delta &delta, const std::string &path) {
        return nodes_of(flushed(nu, delta, path));
    }, py::arg("nu"), py::arg("delta"), py::arg("path"));

    m.def("left_flushing", [](const std::string &nu, const Delta &delta, const Nodes &nodes) {
        return left_flushing(tree_of(nu, delta, nodes)).path().word();
    }, py::arg("nu"), py::arg("delta"), py::arg("nodes"));

    m.def("row_vector", [](const std::string &nu, const Delta &delta, const std::string &path) {
        return row_vector(flushed(nu, delta, path)).entries;
    }, py::arg("nu"), py::arg("delta"), py::arg("path"));

    m.def("reduced_column_vector", [](const std::string &nu, const Delta &delta, const std::string &path) {
        return reduced_column_vector(flushed(nu, delta, path)).entries;
    }, py::arg("nu"), py::arg("delta"), py::arg("path"));

    m.def("transport", [](const std::string &nu_text, const Delta &delta, const std::vector<int> &delta2,
                          const std::string &path, const std::string &direction) {
        const auto nu = parse_path(nu_text);
        const auto source = flushed(nu_text, delta, path);
        const IncrementVector target_delta(delta2, nu);
        if (direction == "h")
            return nodes_of(horizontal_flushing(source, target_delta));
        if (direction == "v")
            return nodes_of(vertical_flushing(source, target_delta));
        throw py::value_error("direction must be 'h' or 'v'");
    }, py::arg("nu"), py::arg("delta"), py::arg("delta2"), py::arg("path"), py::arg("direction") = "h");

    m.def("mtamari_path", [](int mm, int n) { return mtamari_path(mm, n).word(); });
    m.def("mtamari_right_formula", &mtamari_right_formula, py::arg("m"), py::arg("n"), py::arg("length"));
}
