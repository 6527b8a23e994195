#include "graphlib/connectivity.hpp"

#include <algorithm>
#include <functional>

#include "graphlib/flow.hpp"
#include "graphlib/traversal.hpp"

namespace graphlib {

LowReport tarjan_low(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "tarjan_low needs an undirected graph");
    LowReport rep;
    rep.dfs_number.assign(g.n, 0);
    rep.low.assign(g.n, 0);
    std::vector<char> is_cut(g.n, 0);
    int counter = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        rep.dfs_number[v] = ++counter;
        rep.low[v] = rep.dfs_number[v];
        int children = 0;
        for (auto [w, e] : g.adj[v]) {
            if (e == parent_edge) continue;
            if (rep.dfs_number[w] == 0) {
                ++children;
                dfs(w, e);
                rep.low[v] = std::min(rep.low[v], rep.low[w]);
                if (rep.dfs_number[v] < rep.low[w]) rep.bridges.push_back(e);
                if (parent_edge >= 0 && rep.dfs_number[v] <= rep.low[w]) is_cut[v] = 1;
            } else {
                rep.low[v] = std::min(rep.low[v], rep.dfs_number[w]);
            }
        }
        if (parent_edge < 0 && children >= 2) is_cut[v] = 1;
    };
    for (int v = 0; v < g.n; ++v)
        if (rep.dfs_number[v] == 0) dfs(v, -1);

    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) rep.cut_vertices.push_back(v);
    std::sort(rep.bridges.begin(), rep.bridges.end());
    return rep;
}

namespace {

double unit_max_flow(const Graph& g, int s, int t) {
    std::vector<std::pair<int, int>> arcs;
    std::vector<double> caps;
    for (auto [u, v] : g.edges) {
        arcs.push_back({u, v});
        caps.push_back(1);
        arcs.push_back({v, u});
        caps.push_back(1);
    }
    FlowNetwork net = build_network(g.n, std::move(arcs), std::move(caps), s, t);
    return max_flow(net, FlowStrategy::dinic).flow.value;
}

double vertex_capacity_flow(const Graph& g, int s, int t) {
    // split x into x_in = 2x, x_out = 2x+1 with unit capacity between them
    double big = g.n + 1;
    std::vector<std::pair<int, int>> arcs;
    std::vector<double> caps;
    for (int x = 0; x < g.n; ++x) {
        arcs.push_back({2 * x, 2 * x + 1});
        caps.push_back(1);
    }
    for (auto [u, v] : g.edges) {
        arcs.push_back({2 * u + 1, 2 * v});
        caps.push_back(big);
        arcs.push_back({2 * v + 1, 2 * u});
        caps.push_back(big);
    }
    FlowNetwork net = build_network(2 * g.n, std::move(arcs), std::move(caps), 2 * s + 1, 2 * t);
    return max_flow(net, FlowStrategy::dinic).flow.value;
}

}  // namespace

int edge_connectivity(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "edge_connectivity needs an undirected graph");
    if (g.n < 2) fail(errc::too_small, "edge_connectivity needs >= 2 vertices");
    if (!is_connected(g)) return 0;
    double best = g.n;  // lambda <= n-1 always
    for (int t = 1; t < g.n; ++t) best = std::min(best, unit_max_flow(g, 0, t));
    return static_cast<int>(best + 0.5);
}

int vertex_connectivity(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "vertex_connectivity needs an undirected graph");
    if (g.n < 2) fail(errc::too_small, "vertex_connectivity needs >= 2 vertices");
    if (!is_connected(g)) return 0;
    bool any_nonadjacent = false;
    double best = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) {
                any_nonadjacent = true;
                best = std::min(best, vertex_capacity_flow(g, u, v));
            }
    if (!any_nonadjacent) return g.n - 1;  // complete graph convention
    return static_cast<int>(best + 0.5);
}

Graph construct_kld_graph(int kappa, int lambda, int d) {
    if (!(1 <= kappa && kappa <= lambda && lambda <= d))
        fail(errc::bad_ordering, "need 1 <= kappa <= lambda <= d");
    int block = d + 1;
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 2; ++b)
        for (int u = 0; u < block; ++u)
            for (int v = u + 1; v < block; ++v) edges.push_back({b * block + u, b * block + v});
    // lambda joining edges: marked vertices 0..lambda-1 and block..block+kappa-1
    for (int i = 0; i < lambda; ++i) edges.push_back({i, block + (i % kappa)});
    return build_graph(2 * block, std::move(edges));
}

}  // namespace graphlib
