#include "bchroma/closed_forms.hpp"
#include "bchroma/enumerate.hpp"
#include "bchroma/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bchroma;

namespace {

py::object fraction(const Rational &r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::object optional_fraction(const std::optional<Rational> &r) { return r ? fraction(*r) : py::none(); }

py::dict stats_dict(const ChromaStats &s) {
    py::dict d;
    d["mean"] = fraction(s.mean);
    d["variance"] = fraction(s.variance);
    return d;
}

py::dict extremal_dict(const ExtremalColouring &e) {
    py::dict d = stats_dict(e.stats);
    d["strengths"] = e.strengths;
    d["colouring"] = e.colouring.assignment();
    return d;
}

SearchLimits make_limits(int max_n, bool allow_disconnected) {
    SearchLimits limits;
    limits.max_search_order = max_n;
    limits.allow_disconnected = allow_disconnected;
    return limits;
}

Family family_arg(const std::string &name) { return parse_family(name); }

}  // namespace

PYBIND11_MODULE(_bchroma, m) {
    m.doc() = "Exact b-colouring statistics";
    m.attr("__version__") = BCHROMA_VERSION;

    py::register_exception<SearchCapExceeded>(m, "SearchCapExceeded", PyExc_RuntimeError);
    py::register_exception<NoBColouring>(m, "NoBColouring", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge> &edges) { return build_graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", [](const Graph &g) { return std::vector<Edge>(g.edges().begin(), g.edges().end()); })
        .def("degree", &Graph::degree)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("max_degree", &max_degree);
    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("complete", &complete);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("wheel", &wheel);
    m.def("sunlet", &sunlet);
    m.def("closed_ladder", &closed_ladder);
    m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("seed"), py::arg("edge_percent") = 50);
    m.def("corona", &corona);
    m.def("cartesian_product", &cartesian_product);
    m.def("family_graph", [](const std::string &f, int n) { return family_graph(family_arg(f), n); });

    m.def("is_b_colouring", [](const Graph &g, int k, std::vector<int> a) {
        return is_b_colouring(g, Colouring(k, std::move(a)));
    });
    m.def("colouring_stats", [](const Graph &g, int k, std::vector<int> a) {
        return stats_dict(stats_of(distribution(g, Colouring(k, std::move(a)))));
    });
    m.def("pmf", [](const Graph &g, int k, std::vector<int> a) {
        py::list out;
        for (const auto &f : distribution(g, Colouring(k, std::move(a))).pmf) out.append(fraction(f));
        return out;
    });

    m.def(
        "chromatic_number",
        [](const Graph &g, int max_n, bool allow) { return chromatic_number(g, make_limits(max_n, allow)); },
        py::arg("g"), py::arg("max_n") = 32, py::arg("allow_disconnected") = false);
    m.def(
        "b_chromatic_number",
        [](const Graph &g, int max_n, bool allow) { return b_chromatic_number(g, make_limits(max_n, allow)); },
        py::arg("g"), py::arg("max_n") = 32, py::arg("allow_disconnected") = false);
    m.def(
        "min_mean_b_colouring",
        [](const Graph &g, int k, int max_n) { return extremal_dict(min_mean_b_colouring(g, k, make_limits(max_n, false))); },
        py::arg("g"), py::arg("k"), py::arg("max_n") = 32);
    m.def(
        "max_mean_b_colouring",
        [](const Graph &g, int k, int max_n) { return extremal_dict(max_mean_b_colouring(g, k, make_limits(max_n, false))); },
        py::arg("g"), py::arg("k"), py::arg("max_n") = 32);
    m.def(
        "full_report",
        [](const Graph &g, int max_n, bool allow) {
            auto rep = full_report(g, make_limits(max_n, allow));
            py::dict d;
            d["chi"] = rep.chi;
            d["phi"] = rep.phi;
            d["min"] = extremal_dict(rep.min);
            d["max"] = extremal_dict(rep.max);
            d["nodes_explored"] = rep.nodes_explored;
            d["warnings"] = rep.warnings;
            return d;
        },
        py::arg("g"), py::arg("max_n") = 32, py::arg("allow_disconnected") = false);
    m.def("enumerate_b_colourings", [](const Graph &g, int k) {
        std::vector<std::vector<int>> out;
        for_each_b_colouring(g, k, [&](const Colouring &c) {
            out.push_back(c.assignment());
            return true;
        });
        return out;
    });

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : all_families()) out.emplace_back(family_name(f));
        return out;
    });
    m.def("paper_value", [](const std::string &f, int n) {
        auto p = paper_value(family_arg(f), n);
        py::dict d;
        d["mean"] = optional_fraction(p.mean);
        d["variance"] = optional_fraction(p.variance);
        d["mean_expr"] = p.mean_expr;
        d["variance_expr"] = p.variance_expr;
        return d;
    });
    m.def("corrected_value", [](const std::string &f, int n) {
        auto c = corrected_value(family_arg(f), n);
        py::dict d;
        d["mean"] = fraction(c.mean);
        d["variance"] = fraction(c.variance);
        d["mean_expr"] = c.mean_expr;
        d["variance_expr"] = c.variance_expr;
        d["note"] = c.note;
        return d;
    });
    m.def("registered_errata", [](const std::string &f, int n) {
        unsigned mask = registered_errata(family_arg(f), n);
        std::vector<std::string> out;
        if (mask & kMeanField) out.emplace_back("mean");
        if (mask & kVarianceField) out.emplace_back("variance");
        return out;
    });
}
