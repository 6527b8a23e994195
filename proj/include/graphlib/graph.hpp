#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphlib/error.hpp"

namespace graphlib {

/**
 * Simple graph: vertices 0..n-1, no loops, no duplicate edges.
 * Undirected edges are normalized to u < v. Optional nonzero weights
 * aligned with the edge list. Immutable after build_graph.
 */
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;  // empty when unweighted

    // adjacency: (neighbor, edge id), sorted by neighbor index.
    // For directed graphs adj holds out-edges and radj in-edges.
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<std::vector<std::pair<int, int>>> radj;

    int m() const { return static_cast<int>(edges.size()); }
    bool weighted() const { return !weights.empty(); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    double weight(int e) const { return weights.empty() ? 1.0 : weights[e]; }

    /// Edge id of (u,v) ((min,max) for undirected), or -1.
    int edge_id(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
};

Graph build_graph(int n, std::vector<std::pair<int, int>> edges, bool directed = false,
                  std::vector<double> weights = {});

/**
 * Named family generator. Families: complete(n), complete_bipartite(n,m),
 * hypercube(n), grid(k,l), path(n), cycle(n), and the five platonic solids
 * by name (no params).
 */
Graph generate(const std::string& family, const std::vector<long long>& params);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int n, int m);
Graph hypercube_graph(int n);
Graph grid_graph(int k, int l);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Platonic solid together with its canonical 3D vertex coordinates.
struct SolidGraph {
    Graph g;
    std::vector<std::array<double, 3>> coords;
};

SolidGraph platonic_solid(const std::string& name);

const std::vector<std::string>& platonic_names();

/// Ascending degree sequence (out-degrees for directed graphs).
std::vector<int> degree_sequence(const Graph& g);

}  // namespace graphlib
