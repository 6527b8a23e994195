#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "graphlib/cli.hpp"
#include "graphlib/connectivity.hpp"
#include "graphlib/euler_hamilton.hpp"
#include "graphlib/flow.hpp"
#include "graphlib/metrics.hpp"
#include "graphlib/shortest_path.hpp"
#include "graphlib/spanning.hpp"
#include "graphlib/spectral.hpp"
#include "graphlib/traversal.hpp"

namespace py = pybind11;
using namespace graphlib;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, bool directed,
                 const std::vector<double>& weights) {
    return build_graph(n, edges, directed, weights);
}

}  // namespace

PYBIND11_MODULE(graphcore, m) {
    m.doc() = "graph algorithms and spectral graph theory toolbox";

    py::register_exception<GraphError>(m, "GraphError");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("directed") = false,
             py::arg("weights") = std::vector<double>{})
        .def_readonly("n", &Graph::n)
        .def_readonly("directed", &Graph::directed)
        .def_readonly("edges", &Graph::edges)
        .def_readonly("weights", &Graph::weights)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n << ", m=" << g.m() << (g.directed ? ", directed" : "") << ")";
            return s.str();
        });

    m.def("generate", &generate, py::arg("family"), py::arg("params") = std::vector<long long>{});

    m.def("connected_components", &connected_components);
    m.def("is_connected", &is_connected);

    m.def("spanning_tree_count", &spanning_tree_count);
    m.def(
        "mst",
        [](const Graph& g, const std::string& algorithm) {
            TreeResult t =
                mst(g, algorithm == "kruskal" ? MstStrategy::kruskal : MstStrategy::prim);
            return py::make_tuple(t.edges, t.total_weight);
        },
        py::arg("g"), py::arg("algorithm") = "prim");

    m.def("dijkstra", [](const Graph& g, int root) {
        PathTree t = dijkstra(g, root);
        return py::make_tuple(t.dist, t.pred);
    });
    m.def("bellman_ford", [](const Graph& g, int root) -> py::object {
        PathTreeResult r = bellman_ford(g, root);
        if (r.ok()) return py::make_tuple(r.tree->dist, r.tree->pred);
        return py::make_tuple(py::none(), r.negative_cycle->cycle);
    });
    m.def("floyd_warshall", [](const Graph& g) -> py::object {
        DistanceMatrixResult r = floyd_warshall(g);
        if (r.ok()) return py::cast(*r.dist);
        return py::none();
    });

    m.def("edge_connectivity", &edge_connectivity);
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("bridges", [](const Graph& g) { return tarjan_low(g).bridges; });

    m.def("eulerian_kind", [](const Graph& g) {
        EulerClassification c = eulerian_classify(g);
        return c.kind == EulerKind::eulerian_cycle ? "cycle"
               : c.kind == EulerKind::eulerian_path ? "path"
                                                    : "none";
    });
    m.def(
        "eulerian_cycle",
        [](const Graph& g, const std::string& strategy) {
            EulerStrategy s = strategy == "cycle_stack" ? EulerStrategy::cycle_stack
                              : strategy == "fleury"    ? EulerStrategy::fleury
                                                        : EulerStrategy::two_stacks;
            return eulerian_cycle(g, s);
        },
        py::arg("g"), py::arg("strategy") = "two_stacks");
    m.def("hamiltonian_cycle", &hamiltonian_cycle_bruteforce, py::arg("g"), py::arg("max_n") = 12);

    m.def("is_planar", &is_planar);
    m.def("dual_from_cycles", [](const Graph& g) {
        DualGraph d = dual_graph_from_cycles(g);
        return py::make_tuple(d.n, d.edges);
    });

    m.def(
        "max_flow_value",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const std::vector<double>& capacities, int source, int terminal,
           const std::string& strategy) {
            FlowNetwork net = build_network(n, edges, capacities, source, terminal);
            FlowStrategy s = strategy == "ford_fulkerson" ? FlowStrategy::ford_fulkerson
                             : strategy == "edmonds_karp" ? FlowStrategy::edmonds_karp
                                                          : FlowStrategy::dinic;
            return max_flow(net, s).flow.value;
        },
        py::arg("n"), py::arg("edges"), py::arg("capacities"), py::arg("source"),
        py::arg("terminal"), py::arg("strategy") = "dinic");

    m.def("normalized_laplacian", &normalized_laplacian);
    m.def("spectrum", [](const Graph& g) {
        return symmetric_spectrum(normalized_laplacian(g)).eigenvalues;
    });
    m.def("cheeger_constant", [](const Graph& g) {
        CutReport cut = cheeger_constant(g);
        return py::make_tuple(cut.h, cut.best_subset);
    });

    m.def(
        "vertex_centrality",
        [](const Graph& g, const std::string& kind, double epsilon) {
            static const std::map<std::string, VertexMetric> kKinds = {
                {"degree", VertexMetric::degree},
                {"mnc", VertexMetric::mnc},
                {"dmnc", VertexMetric::dmnc},
                {"local_clustering", VertexMetric::local_clustering},
                {"betweenness", VertexMetric::betweenness},
                {"bottleneck", VertexMetric::bottleneck},
                {"closeness", VertexMetric::closeness},
                {"eccentricity", VertexMetric::eccentricity},
                {"radiality", VertexMetric::radiality},
                {"stress", VertexMetric::stress},
                {"local_efficiency_contribution", VertexMetric::local_efficiency_contribution},
            };
            auto it = kKinds.find(kind);
            if (it == kKinds.end()) throw py::value_error("unknown metric " + kind);
            return vertex_centrality(g, it->second, epsilon).values;
        },
        py::arg("g"), py::arg("kind"), py::arg("epsilon") = 1.7);
    m.def(
        "global_metric",
        [](const Graph& g, const std::string& kind) {
            static const std::map<std::string, GlobalMetric> kKinds = {
                {"diameter", GlobalMetric::diameter},
                {"density", GlobalMetric::density},
                {"global_efficiency", GlobalMetric::global_efficiency},
                {"avg_shortest_path", GlobalMetric::avg_shortest_path},
                {"avg_clustering", GlobalMetric::avg_clustering},
            };
            auto it = kKinds.find(kind);
            if (it == kKinds.end()) throw py::value_error("unknown metric " + kind);
            return global_metric(g, it->second);
        },
        py::arg("g"), py::arg("kind"));

    m.def("run_command", [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_command(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    },
          py::arg("args"), py::arg("stdin_text") = "");
}
