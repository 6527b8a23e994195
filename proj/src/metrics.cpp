#include "graphlib/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "graphlib/traversal.hpp"

namespace graphlib {

namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs_dist(const Graph& g, int s) {
    std::vector<int> dist(g.n, kUnreached);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, e] : g.adj[v]) {
            (void)e;
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// dist[s][t] and sigma[s][t] = number of shortest s-t paths, all pairs.
struct PathCensus {
    std::vector<std::vector<int>> dist;
    std::vector<std::vector<double>> sigma;
};

PathCensus path_census(const Graph& g) {
    PathCensus pc;
    pc.dist.assign(g.n, {});
    pc.sigma.assign(g.n, std::vector<double>(g.n, 0));
    for (int s = 0; s < g.n; ++s) {
        pc.dist[s] = bfs_dist(g, s);
        pc.sigma[s][s] = 1;
        std::vector<int> order(g.n);
        for (int v = 0; v < g.n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pc.dist[s][a] < pc.dist[s][b]; });
        for (int v : order) {
            if (pc.dist[s][v] <= 0) continue;
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (pc.dist[s][w] == pc.dist[s][v] - 1) pc.sigma[s][v] += pc.sigma[s][w];
            }
        }
    }
    return pc;
}

void require_undirected(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "metrics need an undirected graph");
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) fail(errc::disconnected, "metric needs a connected graph");
}

/// Induced subgraph on the neighbors of v, vertices relabelled 0..k-1.
Graph neighborhood_graph(const Graph& g, int v) {
    std::vector<int> nbr;
    for (auto [w, e] : g.adj[v]) {
        (void)e;
        nbr.push_back(w);
    }
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < static_cast<int>(nbr.size()); ++i) local[nbr[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges)
        if (local[a] >= 0 && local[b] >= 0) edges.push_back({local[a], local[b]});
    return build_graph(static_cast<int>(nbr.size()), std::move(edges));
}

double clustering_of(const Graph& g, int v) {
    int k = g.degree(v);
    if (k < 2) return 0;
    Graph h = neighborhood_graph(g, v);
    return 2.0 * h.m() / (static_cast<double>(k) * (k - 1));
}

/// Global efficiency of a (possibly disconnected) graph; unreachable ordered
/// pairs contribute zero.
double efficiency_of(const Graph& g) {
    if (g.n < 2) return 0;
    double sum = 0;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist = bfs_dist(g, s);
        for (int t = 0; t < g.n; ++t)
            if (t != s && dist[t] > 0) sum += 1.0 / dist[t];
    }
    return sum / (static_cast<double>(g.n) * (g.n - 1));
}

double avg_path_length(const Graph& g) {
    double sum = 0;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist = bfs_dist(g, s);
        for (int t = 0; t < g.n; ++t) {
            if (t == s) continue;
            if (dist[t] == kUnreached) fail(errc::disconnected, "metric needs a connected graph");
            sum += dist[t];
        }
    }
    return sum / (static_cast<double>(g.n) * (g.n - 1));
}

double avg_clustering_of(const Graph& g) {
    double sum = 0;
    for (int v = 0; v < g.n; ++v) sum += clustering_of(g, v);
    return sum / g.n;
}

int diameter_of(const Graph& g) {
    int diam = 0;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist = bfs_dist(g, s);
        for (int t = 0; t < g.n; ++t) {
            if (dist[t] == kUnreached) fail(errc::disconnected, "metric needs a connected graph");
            diam = std::max(diam, dist[t]);
        }
    }
    return diam;
}

std::vector<double> bottleneck_values(const Graph& g) {
    std::vector<double> bn(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist = bfs_dist(g, s);
        // smallest-index parent on each BFS level
        std::vector<int> parent(g.n, -1);
        int tree_size = 0;
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] == kUnreached) continue;
            ++tree_size;
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (dist[w] == dist[v] - 1 && (parent[v] < 0 || w < parent[v])) parent[v] = w;
            }
        }
        // proper descendant counts, deepest vertices first
        std::vector<int> order;
        for (int v = 0; v < g.n; ++v)
            if (dist[v] != kUnreached) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });
        std::vector<int> subtree(g.n, 1);
        for (int v : order)
            if (parent[v] >= 0) subtree[parent[v]] += subtree[v];
        for (int v : order)
            if (4 * (subtree[v] - 1) > tree_size) bn[v] += 1;
    }
    return bn;
}

}  // namespace

MetricReport vertex_centrality(const Graph& g, VertexMetric kind, double epsilon) {
    require_undirected(g);
    MetricReport rep;
    rep.values.assign(g.n, 0);
    switch (kind) {
        case VertexMetric::degree:
            rep.name = "degree";
            for (int v = 0; v < g.n; ++v) rep.values[v] = g.degree(v);
            break;
        case VertexMetric::mnc:
        case VertexMetric::dmnc: {
            rep.name = kind == VertexMetric::mnc ? "mnc" : "dmnc";
            if (epsilon < 1 || epsilon > 2) fail(errc::bad_params, "epsilon must lie in [1, 2]");
            for (int v = 0; v < g.n; ++v) {
                Graph h = neighborhood_graph(g, v);
                if (h.n == 0) continue;
                std::vector<std::vector<int>> comps = connected_components(h);
                const std::vector<int>* best = &comps[0];
                for (const auto& c : comps)
                    if (c.size() > best->size()) best = &c;
                if (kind == VertexMetric::mnc) {
                    rep.values[v] = static_cast<double>(best->size());
                } else {
                    std::set<int> inside(best->begin(), best->end());
                    int edges = 0;
                    for (auto [a, b] : h.edges)
                        if (inside.count(a) && inside.count(b)) ++edges;
                    rep.values[v] = edges / std::pow(static_cast<double>(best->size()), epsilon);
                }
            }
            break;
        }
        case VertexMetric::local_clustering:
            rep.name = "local_clustering";
            for (int v = 0; v < g.n; ++v) rep.values[v] = clustering_of(g, v);
            break;
        case VertexMetric::betweenness:
        case VertexMetric::stress: {
            bool ratio = kind == VertexMetric::betweenness;
            rep.name = ratio ? "betweenness" : "stress";
            PathCensus pc = path_census(g);
            for (int v = 0; v < g.n; ++v) {
                double total = 0;
                for (int s = 0; s < g.n; ++s) {
                    if (s == v || pc.dist[s][v] == kUnreached) continue;
                    for (int t = 0; t < g.n; ++t) {
                        if (t == s || t == v) continue;
                        if (pc.dist[v][t] == kUnreached) continue;
                        if (pc.dist[s][v] + pc.dist[v][t] != pc.dist[s][t]) continue;
                        double through = pc.sigma[s][v] * pc.sigma[v][t];
                        total += ratio ? through / pc.sigma[s][t] : through;
                    }
                }
                rep.values[v] = total;
            }
            break;
        }
        case VertexMetric::bottleneck:
            rep.name = "bottleneck";
            rep.values = bottleneck_values(g);
            break;
        case VertexMetric::closeness:
        case VertexMetric::eccentricity:
        case VertexMetric::radiality: {
            require_connected(g);
            if (g.n < 2) fail(errc::too_small, "distance centralities need >= 2 vertices");
            int diam = diameter_of(g);
            for (int v = 0; v < g.n; ++v) {
                std::vector<int> dist = bfs_dist(g, v);
                double sum = 0;
                int ecc = 0;
                for (int t = 0; t < g.n; ++t) {
                    sum += dist[t];
                    ecc = std::max(ecc, dist[t]);
                }
                switch (kind) {
                    case VertexMetric::closeness:
                        rep.name = "closeness";
                        rep.values[v] = 1.0 / sum;
                        break;
                    case VertexMetric::eccentricity:
                        rep.name = "eccentricity";
                        rep.values[v] = 1.0 / ecc;
                        break;
                    default:
                        rep.name = "radiality";
                        rep.values[v] = (static_cast<double>(g.n) * (diam + 1) - sum) / (g.n - 1);
                }
            }
            break;
        }
        case VertexMetric::local_efficiency_contribution:
            rep.name = "local_efficiency_contribution";
            for (int v = 0; v < g.n; ++v) rep.values[v] = efficiency_of(neighborhood_graph(g, v));
            break;
    }
    return rep;
}

double global_metric(const Graph& g, GlobalMetric kind) {
    require_undirected(g);
    switch (kind) {
        case GlobalMetric::diameter:
            require_connected(g);
            return diameter_of(g);
        case GlobalMetric::density:
            if (g.n < 2) fail(errc::too_small, "density needs >= 2 vertices");
            return 2.0 * g.m() / (static_cast<double>(g.n) * (g.n - 1));
        case GlobalMetric::global_efficiency:
            require_connected(g);
            return efficiency_of(g);
        case GlobalMetric::avg_shortest_path:
            if (g.n < 2) fail(errc::too_small, "average path length needs >= 2 vertices");
            return avg_path_length(g);
        case GlobalMetric::avg_clustering:
            return avg_clustering_of(g);
    }
    fail(errc::bad_params, "unknown global metric");
}

double small_world(const Graph& g, std::uint64_t seed, int samples) {
    require_undirected(g);
    require_connected(g);
    if (samples < 1) fail(errc::bad_params, "samples must be >= 1");
    if (g.n < 2) fail(errc::too_small, "small world needs >= 2 vertices");

    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) all_pairs.push_back({u, v});

    std::mt19937_64 rng(seed);
    double base_c = 0, base_l = 0;
    for (int s = 0; s < samples; ++s) {
        Graph sample;
        bool found = false;
        for (int attempt = 0; attempt < 20000 && !found; ++attempt) {
            std::vector<std::pair<int, int>> pool = all_pairs;
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(g.m());
            sample = build_graph(g.n, std::move(pool));
            found = is_connected(sample);
        }
        if (!found) fail(errc::degenerate_baseline, "no connected baseline graph found");
        base_c += avg_clustering_of(sample);
        base_l += avg_path_length(sample);
    }
    base_c /= samples;
    base_l /= samples;
    if (base_c == 0 || base_l == 0)
        fail(errc::degenerate_baseline, "baseline clustering or path length is zero");
    return (avg_clustering_of(g) / base_c) / (avg_path_length(g) / base_l);
}

InequalityReport centrality_inequalities_check(const Graph& g) {
    require_undirected(g);
    require_connected(g);
    if (g.n < 3) fail(errc::too_small, "inequality check needs >= 3 vertices");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 2) fail(errc::degree_too_small, "every vertex needs degree >= 2");

    double e_loc = 0;
    bool tight = true;
    for (int v = 0; v < g.n; ++v) {
        Graph h = neighborhood_graph(g, v);
        e_loc += efficiency_of(h);
        if (is_connected(h)) {
            if (diameter_of(h) > 2) tight = false;
        } else {
            tight = false;
        }
    }
    e_loc /= g.n;

    double c = avg_clustering_of(g);
    double l = avg_path_length(g);
    double d = global_metric(g, GlobalMetric::density);
    double e_glob = efficiency_of(g);

    InequalityReport rep;
    rep.slack_local_efficiency = 0.5 * (1 + c) - e_loc;
    rep.slack_path_vs_density = l - (2 - d);
    rep.slack_efficiency_sandwich =
        std::min(2 * e_glob - (3 - l), (1 + d) - 2 * e_glob);
    constexpr double kTol = 1e-9;
    rep.local_efficiency_bound = rep.slack_local_efficiency >= -kTol;
    rep.path_vs_density = rep.slack_path_vs_density >= -kTol;
    rep.efficiency_sandwich = rep.slack_efficiency_sandwich >= -kTol;
    rep.neighborhood_equality_case = tight;
    return rep;
}

}  // namespace graphlib
