#include "alttamari/io.hpp"

#include "alttamari/errors.hpp"

#include <sstream>

namespace alttamari {

Json lattice_to_json(const FiniteLattice &lattice, const Census &census) {
    Json doc;
    doc["nu"] = lattice.nu().word();
    doc["delta"] = std::vector<int>(lattice.delta().entries().begin(),
                                    lattice.delta().entries().end());
    Json elements = Json::array();
    for (ElementId id = 0; id < lattice.size(); ++id)
        elements.push_back({{"id", id}, {"path", lattice.element(id).path().word()}});
    doc["elements"] = std::move(elements);
    Json covers = Json::array();
    for (const Cover &c : lattice.covers())
        covers.push_back({c.low, c.high});
    doc["covers"] = std::move(covers);
    doc["linear_counts"] = census.total;
    return doc;
}

std::string lattice_to_dot(const FiniteLattice &lattice) {
    std::ostringstream out;
    out << "digraph alt_tamari {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (ElementId id = 0; id < lattice.size(); ++id) {
        out << "  n" << id << " [label=\"" << lattice.element(id).path().composition_string()
            << "\"];\n";
    }
    for (const Cover &c : lattice.covers())
        out << "  n" << c.low << " -> n" << c.high << ";\n";
    out << "}\n";
    return out.str();
}

Json tree_to_json(const GridTree &tree) {
    Json doc;
    doc["nu"] = tree.region().nu().word();
    const auto delta = tree.region().delta().entries();
    doc["delta"] = std::vector<int>(delta.begin(), delta.end());
    Json nodes = Json::array();
    for (Point p : tree.nodes())
        nodes.push_back({p.x, p.y});
    doc["nodes"] = std::move(nodes);
    return doc;
}

GridTree tree_from_json(const Json &doc) {
    try {
        LatticePath nu = parse_path(doc.at("nu").get<std::string>());
        IncrementVector delta(doc.at("delta").get<std::vector<int>>(), nu);
        std::vector<Point> nodes;
        for (const auto &node : doc.at("nodes")) {
            auto xy = node.get<std::vector<int>>();
            if (xy.size() != 2)
                throw ValidationError("tree node must be a pair [x, y]");
            nodes.push_back({xy[0], xy[1]});
        }
        return GridTree(build_region(nu, delta), std::move(nodes));
    } catch (const Json::exception &e) {
        throw ValidationError(std::string("malformed tree document: ") + e.what());
    } catch (const ParseError &e) {
        throw ValidationError(std::string("malformed tree document: ") + e.what());
    }
}

Json report_to_json(const TheoremReport &report) {
    Json doc;
    doc["nu"] = report.nu.word();
    doc["deltas_checked"] = report.deltas_checked;
    doc["box_size"] = report.box_size;
    doc["census"] = report.census;
    doc["left"] = report.left;
    doc["right"] = report.right;
    doc["all_equal"] = report.all_equal;
    if (report.counterexample)
        doc["counterexample"] = *report.counterexample;
    return doc;
}

TheoremReport report_from_json(const Json &doc) {
    try {
        TheoremReport report;
        report.nu = parse_path(doc.at("nu").get<std::string>());
        report.deltas_checked = doc.at("deltas_checked").get<std::size_t>();
        report.box_size = doc.value("box_size", report.deltas_checked);
        report.census = doc.at("census").get<std::vector<std::size_t>>();
        report.left = doc.at("left").get<std::vector<std::size_t>>();
        report.right = doc.at("right").get<std::vector<std::size_t>>();
        report.all_equal = doc.at("all_equal").get<bool>();
        if (doc.contains("counterexample"))
            report.counterexample = doc["counterexample"].get<std::string>();
        return report;
    } catch (const Json::exception &e) {
        throw ValidationError(std::string("malformed report document: ") + e.what());
    }
}

std::string census_table(const Census &census) {
    std::ostringstream out;
    out << "length  total  left  right\n";
    for (std::size_t k = 0; k < census.total.size(); ++k) {
        out << k << "  " << census.total[k] << "  " << census.left[k] << "  " << census.right[k]
            << '\n';
    }
    return out.str();
}

} // namespace alttamari
