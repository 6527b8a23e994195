#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "graphlib/graph.hpp"
#include "graphlib/traversal.hpp"

namespace testutil {

using graphlib::Graph;

/// Uniform simple graph on n vertices with exactly m edges.
inline Graph random_graph(std::mt19937_64& rng, int n, int m, bool directed = false) {
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (!directed && u > v) continue;
            pool.push_back({u, v});
        }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<size_t>(m, pool.size()));
    return graphlib::build_graph(n, std::move(pool), directed);
}

/// Random connected graph: spanning tree plus extra random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % v);
        edges.push_back({u, v});
    }
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
    std::shuffle(pool.begin(), pool.end(), rng);
    for (auto [u, v] : pool) {
        if (extra_edges == 0) break;
        bool dup = false;
        for (auto [a, b] : edges) dup = dup || (a == std::min(u, v) && b == std::max(u, v));
        if (dup) continue;
        edges.push_back({u, v});
        --extra_edges;
    }
    return graphlib::build_graph(n, std::move(edges));
}

/// Hop distances by BFS; -1 when unreachable. Independent of the library BFS.
inline std::vector<int> bfs_oracle(const Graph& g, int s) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (auto [w, e] : g.adj[v]) {
            (void)e;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace testutil
