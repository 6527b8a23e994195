#include "graphlib/shortest_path.hpp"

#include <algorithm>
#include <queue>

namespace graphlib {

namespace {

struct Arc {
    int u, v;
    double w;
};

std::vector<Arc> arc_list(const Graph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(g.directed ? g.m() : 2 * g.m());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        arcs.push_back({u, v, g.weight(e)});
        if (!g.directed) arcs.push_back({v, u, g.weight(e)});
    }
    return arcs;
}

struct BfOutcome {
    std::vector<double> dist;
    std::vector<int> pred;
    std::optional<NegativeCycleReport> cycle;
};

BfOutcome bellman_ford_arcs(int n, const std::vector<Arc>& arcs, int root) {
    BfOutcome out;
    out.dist.assign(n, kInf);
    out.pred.assign(n, -1);
    out.dist[root] = 0;
    bool changed = true;
    for (int pass = 1; pass < n && changed; ++pass) {
        changed = false;
        for (const Arc& a : arcs) {
            if (out.dist[a.u] == kInf) continue;
            if (out.dist[a.u] + a.w < out.dist[a.v]) {
                out.dist[a.v] = out.dist[a.u] + a.w;
                out.pred[a.v] = a.u;
                changed = true;
            }
        }
    }
    if (changed) {
        // pass n: any further relaxation certifies a reachable negative cycle
        for (const Arc& a : arcs) {
            if (out.dist[a.u] == kInf || out.dist[a.u] + a.w >= out.dist[a.v]) continue;
            out.pred[a.v] = a.u;
            int x = a.v;
            for (int i = 0; i < n; ++i) x = out.pred[x];
            std::vector<int> cyc;
            for (int c = x; cyc.empty() || c != x; c = out.pred[c]) cyc.push_back(c);
            std::reverse(cyc.begin(), cyc.end());  // pred-walk is against arc direction
            NegativeCycleReport report;
            report.cycle = cyc;
            for (size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                double best = kInf;
                for (const Arc& b : arcs)
                    if (b.u == u && b.v == v) best = std::min(best, b.w);
                report.weight += best;
            }
            out.cycle = std::move(report);
            return out;
        }
    }
    return out;
}

std::optional<NegativeCycleReport> undirected_negative_edge(const Graph& g) {
    if (g.directed || !g.weighted()) return std::nullopt;
    for (int e = 0; e < g.m(); ++e)
        if (g.weights[e] < 0) {
            // an undirected negative edge is a 2-step negative cycle
            NegativeCycleReport r;
            r.cycle = {g.edges[e].first, g.edges[e].second};
            r.weight = 2 * g.weights[e];
            return r;
        }
    return std::nullopt;
}

std::vector<double> dijkstra_arcs(int n, const std::vector<std::vector<std::pair<int, double>>>& out_arcs,
                                  int root, std::vector<int>* pred) {
    std::vector<double> dist(n, kInf);
    if (pred) pred->assign(n, -1);
    dist[root] = 0;
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0, root});
    std::vector<char> done(n, 0);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (auto [w, wt] : out_arcs[v])
            if (d + wt < dist[w]) {
                dist[w] = d + wt;
                if (pred) (*pred)[w] = v;
                heap.push({dist[w], w});
            }
    }
    return dist;
}

}  // namespace

PathTree dijkstra(const Graph& g, int root) {
    if (root < 0 || root >= g.n) fail(errc::index_out_of_range, "root out of range");
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) <= 0) fail(errc::non_positive_weight, "dijkstra needs positive weights");
    std::vector<std::vector<std::pair<int, double>>> out(g.n);
    for (const Arc& a : arc_list(g)) out[a.u].push_back({a.v, a.w});
    PathTree t;
    t.root = root;
    t.dist = dijkstra_arcs(g.n, out, root, &t.pred);
    return t;
}

PathTreeResult bellman_ford(const Graph& g, int root) {
    if (root < 0 || root >= g.n) fail(errc::index_out_of_range, "root out of range");
    PathTreeResult res;
    if (auto neg = undirected_negative_edge(g)) {
        res.negative_cycle = std::move(neg);
        return res;
    }
    BfOutcome out = bellman_ford_arcs(g.n, arc_list(g), root);
    if (out.cycle) {
        res.negative_cycle = std::move(out.cycle);
        return res;
    }
    res.tree = PathTree{root, std::move(out.dist), std::move(out.pred)};
    return res;
}

DistanceMatrixResult floyd_warshall(const Graph& g) {
    DistanceMatrixResult res;
    int n = g.n;
    DistanceMatrix d(n, std::vector<double>(n, kInf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const Arc& a : arc_list(g)) d[a.u][a.v] = std::min(d[a.u][a.v], a.w);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (int j = 0; j < n; ++j)
                if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
        }
    for (int v = 0; v < n; ++v)
        if (d[v][v] < 0) {
            // recover a concrete cycle with the Bellman-Ford machinery
            auto bf = bellman_ford(g, v);
            res.negative_cycle = bf.negative_cycle;
            if (!res.negative_cycle) {
                NegativeCycleReport r;
                r.cycle = {v};
                r.weight = d[v][v];
                res.negative_cycle = r;
            }
            return res;
        }
    res.dist = std::move(d);
    return res;
}

DistanceMatrixResult johnson(const Graph& g) {
    DistanceMatrixResult res;
    if (auto neg = undirected_negative_edge(g)) {
        res.negative_cycle = std::move(neg);
        return res;
    }
    int n = g.n;
    std::vector<Arc> arcs = arc_list(g);
    // virtual super-source n with zero-weight arcs to every vertex
    std::vector<Arc> augmented = arcs;
    for (int v = 0; v < n; ++v) augmented.push_back({n, v, 0});
    BfOutcome base = bellman_ford_arcs(n + 1, augmented, n);
    if (base.cycle) {
        res.negative_cycle = std::move(base.cycle);
        return res;
    }
    const std::vector<double>& h = base.dist;
    std::vector<std::vector<std::pair<int, double>>> out(n);
    for (const Arc& a : arcs) out[a.u].push_back({a.v, a.w + h[a.u] - h[a.v]});

    DistanceMatrix d(n, std::vector<double>(n, kInf));
    for (int s = 0; s < n; ++s) {
        std::vector<double> ds = dijkstra_arcs(n, out, s, nullptr);
        for (int t = 0; t < n; ++t)
            if (ds[t] != kInf) d[s][t] = ds[t] - h[s] + h[t];
    }
    res.dist = std::move(d);
    return res;
}

}  // namespace graphlib
