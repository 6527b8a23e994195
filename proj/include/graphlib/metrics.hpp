#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

enum class VertexMetric {
    degree,
    mnc,
    dmnc,
    local_clustering,
    betweenness,
    bottleneck,
    closeness,
    eccentricity,
    radiality,
    stress,
    local_efficiency_contribution,
};

enum class GlobalMetric { diameter, density, global_efficiency, avg_shortest_path, avg_clustering };

/// One value per vertex; `name` is the catalogue name of the metric.
struct MetricReport {
    std::string name;
    std::vector<double> values;
};

/**
 * Vertex centralities on an unweighted undirected graph. Distances are BFS
 * hop counts; `epsilon` only affects the dmnc kind and must lie in [1, 2].
 */
MetricReport vertex_centrality(const Graph& g, VertexMetric kind, double epsilon = 1.7);

double global_metric(const Graph& g, GlobalMetric kind);

/**
 * Small-world coefficient (C/C_rand)/(L/L_rand); the baselines average over
 * `samples` seeded uniform connected graphs with the same vertex and edge
 * counts.
 */
double small_world(const Graph& g, std::uint64_t seed, int samples = 20);

/// The three centrality inequalities evaluated on one graph.
struct InequalityReport {
    bool local_efficiency_bound = false;  // E_loc <= (1 + C) / 2
    bool path_vs_density = false;         // L >= 2 - D
    bool efficiency_sandwich = false;     // 3 - L <= 2 E_glob <= 1 + D
    double slack_local_efficiency = 0;
    double slack_path_vs_density = 0;
    double slack_efficiency_sandwich = 0;  // smaller slack of the two sides
    bool neighborhood_equality_case = false;  // diam of every neighborhood <= 2
};

InequalityReport centrality_inequalities_check(const Graph& g);

}  // namespace graphlib
