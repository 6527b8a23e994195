#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Single-source result: dist[root]=0, +inf for unreachable, pred tree edges.
struct PathTree {
    int root = 0;
    std::vector<double> dist;
    std::vector<int> pred;  // -1 for root/unreachable
};

struct NegativeCycleReport {
    std::vector<int> cycle;  // consecutive pairs (and last->first) are edges
    double weight = 0;
};

struct PathTreeResult {
    std::optional<PathTree> tree;
    std::optional<NegativeCycleReport> negative_cycle;
    bool ok() const { return tree.has_value(); }
};

using DistanceMatrix = std::vector<std::vector<double>>;

struct DistanceMatrixResult {
    std::optional<DistanceMatrix> dist;
    std::optional<NegativeCycleReport> negative_cycle;
    bool ok() const { return dist.has_value(); }
};

/// Positive weights only. Unweighted graphs count every edge as 1.
PathTree dijkstra(const Graph& g, int root);

PathTreeResult bellman_ford(const Graph& g, int root);

DistanceMatrixResult floyd_warshall(const Graph& g);

DistanceMatrixResult johnson(const Graph& g);

}  // namespace graphlib
