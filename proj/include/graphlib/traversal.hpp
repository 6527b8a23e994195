#pragma once

#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

enum class Order { dfs, bfs };

/**
 * Result of a rooted traversal. Numbering starts at 1 at the root;
 * unreached vertices keep number 0 and parent -1. Neighbors are explored
 * in ascending vertex index, so every traversal is deterministic.
 */
struct Traversal {
    int root = 0;
    std::vector<int> order;   // vertices in visit order
    std::vector<int> number;  // 1-based assignment, 0 = unreached
    std::vector<int> parent;  // -1 for root and unreached vertices
};

Traversal traverse(const Graph& g, int root, Order order);

/// Vertex partition by reachability (weak connectivity for directed graphs).
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Spanning tree edge ids per component; roots are smallest index per component.
std::vector<std::vector<int>> spanning_forest(const Graph& g, Order order);

/**
 * Two-coloring when every component is free of odd cycles; otherwise an
 * explicit odd closed walk as certificate.
 */
struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;       // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // closed odd-length cycle otherwise
};

Bipartition bipartite_partition(const Graph& g);

}  // namespace graphlib
