#pragma once

#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

/// DFS numbers, low values, and the bridges/cut vertices they certify.
struct LowReport {
    std::vector<int> dfs_number;  // 1-based, 0 = isolated start? always assigned
    std::vector<int> low;
    std::vector<int> bridges;       // edge ids
    std::vector<int> cut_vertices;  // ascending
};

LowReport tarjan_low(const Graph& g);

/// lambda: minimum edge deletions disconnecting g (0 when already disconnected).
int edge_connectivity(const Graph& g);

/// kappa: minimum vertex deletions; kappa(K_n) = n-1 by convention.
int vertex_connectivity(const Graph& g);

/**
 * Witness that any 1 <= kappa <= lambda <= d is realizable: two K_{d+1}
 * blocks joined by lambda edges whose endpoints cover lambda marked vertices
 * on one side and kappa on the other.
 */
Graph construct_kld_graph(int kappa, int lambda, int d);

}  // namespace graphlib
