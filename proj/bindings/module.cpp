#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "rainbowlab/ar_search.hpp"
#include "rainbowlab/coloring.hpp"
#include "rainbowlab/extremal.hpp"
#include "rainbowlab/graph.hpp"
#include "rainbowlab/packing.hpp"

namespace py = pybind11;
using namespace rainbowlab;

namespace {

const char* avoid_outcome_name(AvoidOutcome o) {
    switch (o) {
        case AvoidOutcome::present: return "present";
        case AvoidOutcome::absent: return "absent";
        default: return "exhausted";
    }
}

py::object optional_coloring(const std::optional<EdgeColoring>& c) {
    if (!c) return py::none();
    return py::cast(*c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact tools for rainbow triangle packings in edge-colored complete graphs";

    py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("turan", &Graph::turan, py::arg("n"), py::arg("p"))
        .def_static("complete_bipartite", &Graph::complete_bipartite, py::arg("a"), py::arg("b"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("with_edge", &Graph::with_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) +
                   ")";
        });

    m.def("join", &join, py::arg("g"), py::arg("h"));
    m.def("turan_edges", &turan_edges, py::arg("n"), py::arg("p"));
    m.def("moon_ex", &moon_ex, py::arg("n"), py::arg("t"));
    m.def(
        "ar_formula",
        [](long long n, long long t) {
            ArFormulaResult r = ar_formula(n, t);
            return py::make_tuple(r.value, r.in_proven_range);
        },
        py::arg("n"), py::arg("t"), "returns (value, in_proven_range)");
    m.def("are_isomorphic", &are_isomorphic, py::arg("g"), py::arg("h"), py::arg("max_n") = 10);
    m.def("graph6_encode", &graph6_encode, py::arg("g"));
    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); }, py::arg("text"));

    m.def("enumerate_triangles", &enumerate_triangles, py::arg("g"));
    m.def(
        "max_matching", [](const Graph& g) { return max_matching(g).edges; }, py::arg("g"));
    m.def(
        "max_independent_triangles",
        [](const Graph& g, std::uint64_t budget) {
            return max_independent_triangles(g, PackingLimits{budget}).triples;
        },
        py::arg("g"), py::arg("budget") = PackingLimits{}.node_budget);
    m.def(
        "has_k_disjoint_triangles",
        [](const Graph& g, int k, std::uint64_t budget) {
            return has_k_disjoint_triangles(g, k, PackingLimits{budget});
        },
        py::arg("g"), py::arg("k"), py::arg("budget") = PackingLimits{}.node_budget);

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<int, std::vector<int>, int>(), py::arg("n"), py::arg("colors"), py::arg("r"))
        .def_static("all_distinct", &EdgeColoring::all_distinct, py::arg("n"))
        .def_static("monochromatic", &EdgeColoring::monochromatic, py::arg("n"))
        .def_static(
            "from_text", [](const std::string& s) { return coloring_from_text(s); }, py::arg("text"))
        .def_property_readonly("n", &EdgeColoring::vertex_count)
        .def_property_readonly("colors", &EdgeColoring::color_count)
        .def("color", &EdgeColoring::color, py::arg("u"), py::arg("v"))
        .def("values", &EdgeColoring::values)
        .def("classes", &EdgeColoring::classes)
        .def("to_text", [](const EdgeColoring& c) { return coloring_to_text(c); })
        .def("__repr__", [](const EdgeColoring& c) {
            return "EdgeColoring(n=" + std::to_string(c.vertex_count()) +
                   ", colors=" + std::to_string(c.color_count()) + ")";
        });

    m.def("build_lower_bound_coloring", &build_lower_bound_coloring, py::arg("n"), py::arg("t"));
    m.def(
        "has_rainbow_packing",
        [](const EdgeColoring& c, int k, std::uint64_t budget) -> py::object {
            auto p = has_rainbow_packing(c, k, PackingLimits{budget});
            if (!p) return py::none();
            return py::make_tuple(p->triples, p->triple_colors);
        },
        py::arg("coloring"), py::arg("k"), py::arg("budget") = PackingLimits{}.node_budget,
        "returns None, or (triples, triple_colors) of a rainbow k-packing");
    m.def("extract_rainbow_subgraph", &extract_rainbow_subgraph, py::arg("coloring"));
    m.def("merge_color_classes", &merge_color_classes, py::arg("coloring"), py::arg("keep"), py::arg("away"));
    m.def("reduce_to_r_colors", &reduce_to_r_colors, py::arg("coloring"), py::arg("r"));
    m.def("count_canonical_partitions", &count_canonical_partitions, py::arg("m"), py::arg("r"));

    m.def(
        "exists_avoiding_coloring",
        [](int n, int r, int k, std::uint64_t budget, int workers) {
            SearchOptions opts;
            opts.node_budget = budget;
            opts.workers = workers;
            AvoidingResult res = exists_avoiding_coloring(n, r, k, opts);
            py::dict d;
            d["outcome"] = avoid_outcome_name(res.outcome);
            d["witness"] = optional_coloring(res.witness);
            d["nodes"] = res.nodes;
            return d;
        },
        py::arg("n"), py::arg("r"), py::arg("k"), py::arg("budget") = SearchOptions{}.node_budget,
        py::arg("workers") = 1);
    m.def(
        "ar_exact",
        [](int n, int k, std::uint64_t budget, int workers) {
            SearchOptions opts;
            opts.node_budget = budget;
            opts.workers = workers;
            SearchReport rep = ar_exact(n, k, opts);
            py::dict d;
            d["n"] = rep.n;
            d["k"] = rep.k;
            d["outcome"] = rep.outcome == SearchOutcome::exact ? "exact" : "exhausted";
            d["ar"] = rep.ar;
            d["ar_lower"] = rep.ar_lower;
            d["ar_upper"] = rep.ar_upper;
            d["witness"] = optional_coloring(rep.witness);
            d["nodes"] = rep.nodes;
            d["wall_ms"] = rep.wall_ms;
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("budget") = SearchOptions{}.node_budget, py::arg("workers") = 1);

    m.def("generate_graphs", &generate_graphs, py::arg("n"));
    m.def(
        "verify_moon",
        [](int n_max) {
            CensusResult res = verify_moon(n_max);
            py::dict d;
            d["graphs_examined"] = res.graphs_examined;
            d["violations"] = res.violations;
            py::list ext;
            for (const auto& r : res.extremal) {
                py::dict e;
                e["n"] = r.n;
                e["t"] = r.t;
                e["bound"] = r.bound;
                e["graph6"] = r.graph6;
                e["matches_reference"] = r.matches_reference;
                ext.append(e);
            }
            d["extremal"] = ext;
            d["ok"] = res.ok();
            return d;
        },
        py::arg("n_max"));
    m.def(
        "verify_gamma",
        [](int n_max) {
            CensusResult res = verify_gamma(n_max);
            py::dict d;
            d["graphs_examined"] = res.graphs_examined;
            d["violations"] = res.violations;
            d["extremal_count"] = res.extremal.size();
            d["ok"] = res.ok();
            return d;
        },
        py::arg("n_max"));
    m.def(
        "lemma_pairs_extract",
        [](const Graph& g, int t) {
            PairsExtraction ex = lemma_pairs_extract(g, t);
            py::dict d;
            d["pivot"] = ex.pivot;
            d["independent_set"] = ex.independent_set;
            d["low_degree"] = ex.low_degree;
            d["core"] = ex.core;
            d["counterexamples"] = ex.counterexamples;
            d["ok"] = ex.ok();
            return d;
        },
        py::arg("g"), py::arg("t"));
    m.def("moon_perturbation_failures", &moon_perturbation_failures, py::arg("n"), py::arg("t"));
    m.def(
        "random_dense_triangle_free",
        [](int n, int max_deletions, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return random_dense_triangle_free(n, max_deletions, rng);
        },
        py::arg("n"), py::arg("max_deletions"), py::arg("seed") = 0);
}
