#pragma once

#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

struct TreeResult {
    std::vector<int> edges;  // edge ids forming the spanning tree
    double total_weight = 0;
};

enum class MstStrategy { prim, kruskal };

/// Minimum spanning tree; ties broken by smallest edge id.
TreeResult mst(const Graph& g, MstStrategy strategy);

/**
 * Number of spanning trees: Laplacian cofactor at (n-1,n-1), computed by
 * Bareiss fraction-free elimination over exact integers. Disconnected
 * graphs return 0.
 */
unsigned long long spanning_tree_count(const Graph& g);

/// Exhaustive oracle: count edge subsets of size n-1 that span. Needs m <= 24.
unsigned long long spanning_tree_count_bruteforce(const Graph& g);

}  // namespace graphlib
