#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "brush/cleaning.hpp"
#include "brush/constructions.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/report.hpp"
#include "brush/solver.hpp"

namespace py = pybind11;
using namespace brush;

namespace {

std::vector<Vertex> order_of(const CleaningSequence& s) {
    return {s.order().begin(), s.order().end()};
}

std::vector<int> counts_of(const BrushConfig& w) {
    return {w.counts().begin(), w.counts().end()};
}

CleaningSequence make_seq(const Graph& g, const std::vector<Vertex>& order) {
    return CleaningSequence(g.vertex_count(), order);
}

DpOptions dp_opts(int max_vertices) {
    DpOptions o;
    o.max_vertices = max_vertices;
    return o;
}

py::dict solve_dict(const SolveResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["witness"] = order_of(r.witness);
    d["complete"] = r.complete;
    d["lower_bound"] = r.lower_bound;
    d["states"] = r.stats.states;
    d["elapsed_us"] = r.stats.elapsed.count();
    return d;
}

py::dict construction_dict(const Construction& c) {
    py::dict d;
    d["config"] = counts_of(c.config);
    d["sequence"] = order_of(c.sequence);
    d["total"] = c.config.total();
    d["from_solver"] = c.from_solver;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Brush numbers of graphs: exact solvers, closed-form constructions and reductions.";

    // Translators run newest first, so the base class goes in before its subclasses.
    auto base = py::register_exception<Error>(m, "BrushError");
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<InvalidSequence>(m, "InvalidSequence", base);
    py::register_exception<InvalidOrientation>(m, "InvalidOrientation", base);
    py::register_exception<InvalidInput>(m, "InvalidInput", base);
    py::register_exception<InfeasibleStep>(m, "InfeasibleStep", base);
    py::register_exception<TooLarge>(m, "TooLarge", base);
    py::register_exception<ResourceError>(m, "ResourceError", base);
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base);
    py::register_exception<InvalidClassification>(m, "InvalidClassification", base);
    py::register_exception<InternalError>(m, "InternalError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("vertex_count"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            auto s = g.neighbors(v);
            return std::vector<Vertex>(s.begin(), s.end());
        })
        .def("has_edge", &Graph::has_edge)
        .def("edges", &Graph::edges)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<ProductGraph>(m, "ProductGraph")
        .def_readonly("graph", &ProductGraph::graph)
        .def_property_readonly("m", [](const ProductGraph& p) { return p.labeling.m; })
        .def_property_readonly("n", [](const ProductGraph& p) { return p.labeling.n; })
        .def("flat", [](const ProductGraph& p, int i, int j) { return p.labeling.flat(i, j); });

    m.def("make_path", &make_path);
    m.def("make_cycle", &make_cycle);
    m.def("make_clique", &make_clique);
    m.def("make_empty", &make_empty);
    m.def("make_random", &make_random, py::arg("k"), py::arg("p"), py::arg("seed"));
    m.def("cartesian_product", &cartesian_product);
    m.def("make_torus", &make_torus);
    m.def("make_clique_path", &make_clique_path);
    m.def("make_clique_cycle", &make_clique_cycle);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("serialize_edge_list", &serialize_edge_list);

    // cleaning
    m.def("brush_cost", [](const Graph& g, const std::vector<Edge>& arcs) {
        return brush_cost(g, Orientation{g.vertex_count(), arcs});
    }, py::arg("g"), py::arg("arcs"));
    m.def("orientation_from_sequence", [](const Graph& g, const std::vector<Vertex>& order) {
        return orientation_from_sequence(g, make_seq(g, order)).arcs;
    });
    m.def("verify_acyclic", [](int n, const std::vector<Edge>& arcs) {
        return verify_acyclic(Orientation{n, arcs});
    });
    m.def("minimal_config_for_sequence", [](const Graph& g, const std::vector<Vertex>& order) {
        return counts_of(minimal_config_for_sequence(g, make_seq(g, order)));
    });
    m.def("simulate", [](const Graph& g, const std::vector<int>& w0, const std::vector<Vertex>& order) {
        const auto t = simulate(g, BrushConfig(w0), make_seq(g, order));
        py::list steps;
        for (const auto& s : t.steps) {
            py::dict d;
            d["vertex"] = s.vertex;
            d["brushes_before"] = s.brushes_before;
            d["cleaned_to"] = s.cleaned_to;
            d["brushes_left"] = s.brushes_left;
            steps.append(d);
        }
        py::dict out;
        out["steps"] = steps;
        out["final_brushes"] = t.final_brushes;
        return out;
    }, "Runs the cleaning; raises InfeasibleStep if a vertex is short of brushes.");
    m.def("can_clean", [](const Graph& g, const std::vector<int>& w0) {
        const auto r = can_clean(g, BrushConfig(w0));
        py::dict d;
        d["cleanable"] = r.cleanable;
        d["sequence"] = order_of(r.sequence);
        d["blocking"] = r.blocking;
        return d;
    });

    // solvers
    m.def("brush_number_dp", [](const Graph& g, int max_vertices) {
        SolveResult r;
        {
            py::gil_scoped_release unlocked;
            r = brush_number_dp(g, dp_opts(max_vertices));
        }
        return solve_dict(r);
    }, py::arg("g"), py::arg("max_vertices") = 22);
    m.def("brush_number_bnb", [](const Graph& g, double timeout_s, std::optional<long> upper_hint) {
        BnbOptions o;
        o.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
        o.upper_hint = upper_hint;
        return solve_dict(brush_number_bnb(g, o));
    }, py::arg("g"), py::arg("timeout_s") = 60.0, py::arg("upper_hint") = py::none());
    m.def("brute_force_permutations", [](const Graph& g) { return solve_dict(brute_force_permutations(g)); });
    m.def("parity_lower_bound", &parity_lower_bound);
    m.def("optimal_sequences", [](const Graph& g, std::size_t limit) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& s : optimal_sequences(g, limit)) out.push_back(order_of(s));
        return out;
    }, py::arg("g"), py::arg("limit") = 16);
    m.def("check_box_conjecture", [](const Graph& h, int m, bool connected_only) {
        const auto r = check_box_conjecture(h, m, "H", {},
                                            connected_only ? BoxFilter::ConnectedOnly : BoxFilter::AllGraphs);
        py::dict d;
        d["path_value"] = r.path_value;
        d["clique_value"] = r.clique_value;
        d["graphs_checked"] = r.graphs_checked;
        d["min"] = r.min.value;
        d["max"] = r.max.value;
        py::list v;
        for (const auto& a : r.violations) v.append(py::make_tuple(a.value, a.edges));
        d["violations"] = v;
        d["holds"] = r.holds();
        return d;
    }, py::arg("h"), py::arg("m"), py::arg("connected_only") = false);

    // constructions
    m.def("torus_config", [](int a, int b) { return construction_dict(torus_config(a, b)); });
    m.def("torus_brush_number", &torus_brush_number);
    m.def("km_pn_config", [](int a, int b) {
        return construction_dict(a % 2 == 0 ? km_pn_config(a, b) : km_pn_config_odd(a, b));
    }, "K_m x P_n configuration; odd m uses the validated odd construction.");
    m.def("km_pn_brush_number", &km_pn_brush_number);
    m.def("clique_config", [](int k) { return construction_dict(clique_config(k)); });
    m.def("path_config", [](int k) { return construction_dict(path_config(k)); });
    m.def("cycle_config", [](int k) { return construction_dict(cycle_config(k)); });

    m.def("reduce_optimal_torus", [](int a, int b) {
        const auto r = reduce_optimal_torus(make_torus(a, b));
        py::dict d;
        d["config"] = counts_of(r.config);
        d["sequence"] = order_of(r.sequence);
        d["witnesses_tried"] = r.witnesses_tried;
        d["axis"] = to_string(r.reduction.rows.axis);
        d["lines"] = py::make_tuple(r.reduction.rows.first, r.reduction.rows.second);
        d["reduced_shape"] = py::make_tuple(r.reduction.merged.torus.labeling.m, r.reduction.merged.torus.labeling.n);
        d["reduced_config"] = counts_of(r.reduction.merged.config);
        d["reduced_sequence"] = order_of(r.reduction.merged.sequence);
        d["total_before"] = r.reduction.total_before;
        d["total_after"] = r.reduction.total_after;
        return d;
    }, "Reduces C_m x C_n to a smaller torus from a DP-optimal cleaning.");

    m.def("delete_clique_layer", [](int a, int b, const std::vector<int>& w0, const std::vector<Vertex>& order) {
        const auto kp = make_clique_path(a, b);
        const auto d = delete_clique_layer(kp, BrushConfig(w0), make_seq(kp.graph, order));
        std::string classes;
        for (auto c : d.classes.pair_class) classes += to_char(c);
        py::dict out;
        out["classes"] = classes;
        out["config"] = counts_of(d.config);
        out["sequence"] = order_of(d.sequence);
        out["input_total"] = d.input_total;
        out["output_total"] = d.output_total;
        out["class_bound"] = d.class_bound ? py::cast(*d.class_bound) : py::none();
        out["extra_middle_brush"] = d.extra_middle_brush;
        out["cleans"] = d.cleans;
        out["diagnostics"] = d.classes.diagnostics;
        return out;
    }, py::arg("m"), py::arg("n"), py::arg("config"), py::arg("sequence"));

    m.def("report_clique_cycle", [](const std::vector<std::pair<int, int>>& instances) {
        const auto r = report_clique_cycle(instances);
        py::dict d;
        py::list rows;
        for (const auto& row : r.rows) {
            rows.append(py::dict(py::arg("m") = row.m, py::arg("n") = row.n, py::arg("value") = row.value,
                                 py::arg("plain") = row.plain_reading, py::arg("scaled") = row.scaled_reading));
        }
        d["rows"] = rows;
        d["verdict"] = r.verdict();
        d["text"] = r.to_text();
        return d;
    });
}
