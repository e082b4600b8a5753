#include <mlc/colour.hh>
#include <mlc/errors.hh>
#include <mlc/graph.hh>
#include <mlc/io.hh>
#include <mlc/oracle.hh>
#include <mlc/parallel.hh>
#include <mlc/solver.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mlc;

namespace
{
    auto to_bitset(int n, const std::vector<Vertex> & vertices) -> Bitset
    {
        Bitset p{n};
        for (auto v : vertices) {
            if (v < 0 || v >= n)
                throw ArgumentError{"vertex " + std::to_string(v) + " is out of range"};
            p.set(v);
        }
        return p;
    }
}

PYBIND11_MODULE(_mlclique, m)
{
    m.doc() = "Maximum labelled clique solver. Vertices and labels are 0-based.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<GraphError>(m, "GraphError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("__len__", &Graph::size)
        .def("__repr__", [] (const Graph & g) {
            return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("build_graph", [] (int n, const std::vector<Edge> & edges) { return build_graph(n, edges); },
            py::arg("n"), py::arg("edges"));

    py::class_<LabelledGraph>(m, "LabelledGraph")
        .def_property_readonly("graph", &LabelledGraph::graph)
        .def_property_readonly("size", &LabelledGraph::size)
        .def_property_readonly("num_labels", &LabelledGraph::num_labels)
        .def("label", &LabelledGraph::label)
        .def("labelled_edges", [] (const LabelledGraph & g) {
            std::vector<std::tuple<int, int, int>> result;
            for (auto e : g.labelled_edges())
                result.emplace_back(e.u, e.v, e.label);
            return result;
        });

    m.def("build_labelled", [] (const Graph & g, int num_labels, const std::vector<std::tuple<int, int, int>> & labels) {
        std::vector<LabelledEdge> edges;
        for (auto [u, v, k] : labels)
            edges.push_back(LabelledEdge{ u, v, k });
        return build_labelled(g, num_labels, edges);
    }, py::arg("graph"), py::arg("num_labels"), py::arg("labels"));

    m.def("parse_dimacs", [] (const std::string & text) { return parse_dimacs(text).graph; }, py::arg("text"));
    m.def("write_dimacs", [] (const Graph & g) {
        std::ostringstream out;
        write_dimacs(g, out);
        return out.str();
    });
    m.def("parse_labels", [] (const std::string & text, const Graph & g) { return parse_labels(text, g); },
            py::arg("text"), py::arg("graph"));
    m.def("random_labels", &random_labels, py::arg("graph"), py::arg("num_labels"), py::arg("seed"));
    m.def("resolve_budget", [] (int num_labels, std::optional<int> budget, std::optional<int> percent) {
        if (budget.has_value() == percent.has_value())
            throw ArgumentError{"give exactly one of budget and percent"};
        return resolve_budget(budget ? BudgetSpec::absolute(*budget) : BudgetSpec::percentage(*percent), num_labels);
    }, py::arg("num_labels"), py::kw_only(), py::arg("budget") = py::none(), py::arg("percent") = py::none());

    m.def("colour_order", [] (const Graph & g, std::optional<std::vector<Vertex>> vertices) {
        Bitset p{g.size()};
        if (vertices)
            p = to_bitset(g.size(), *vertices);
        else
            p.set_all();
        auto result = colour_order(g, p);
        return std::make_pair(result.order, result.bounds);
    }, py::arg("graph"), py::arg("vertices") = py::none());

    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("nodes_pass1", &SearchStats::nodes_pass1)
        .def_readonly("nodes_pass2", &SearchStats::nodes_pass2)
        .def_readonly("second_pass_skipped", &SearchStats::second_pass_skipped)
        .def_readonly("workers", &SearchStats::workers)
        .def_readonly("elapsed", &SearchStats::elapsed);

    py::class_<Solution>(m, "Solution")
        .def_readonly("clique", &Solution::clique)
        .def_property_readonly("labels", [] (const Solution & s) { return s.labels.to_vector(); })
        .def_readonly("stats", &Solution::stats)
        .def_property_readonly("size", &Solution::size)
        .def_property_readonly("cost", &Solution::cost)
        .def("__repr__", [] (const Solution & s) {
            return "Solution(size=" + std::to_string(s.size()) + ", cost=" + std::to_string(s.cost()) + ")";
        });

    m.def("solve", [] (const LabelledGraph & g, int budget) {
        py::gil_scoped_release release;
        return solve(g, budget);
    }, py::arg("graph"), py::arg("budget"));

    m.def("solve_parallel", [] (const LabelledGraph & g, int budget, int workers) {
        py::gil_scoped_release release;
        return solve_parallel(g, budget, workers);
    }, py::arg("graph"), py::arg("budget"), py::arg("workers"));

    m.def("oracle_solve", [] (const LabelledGraph & g, int budget) {
        auto r = oracle_solve(g, budget);
        return py::make_tuple(r.size, r.cost, r.witness);
    }, py::arg("graph"), py::arg("budget"));

    m.def("clique_cost", [] (const LabelledGraph & g, const std::vector<Vertex> & clique) {
        return clique_cost(g, clique).cost();
    }, py::arg("graph"), py::arg("clique"));
    m.def("is_clique", [] (const Graph & g, const std::vector<Vertex> & vertices) { return is_clique(g, vertices); });

    m.def("is_better", [] (int size_a, int cost_a, int size_b, int cost_b) {
        return is_better({ size_a, cost_a }, { size_b, cost_b });
    }, py::arg("size_a"), py::arg("cost_a"), py::arg("size_b"), py::arg("cost_b"));
    m.def("incumbent_key", [] (int size, int cost) { return incumbent_key(size, cost); });
}
