#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

/**
 * Combinatorial embedding: counterclockwise cyclic order of incident edge
 * ids at each vertex. Faces and duals are derived from it by face tracing.
 */
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

/**
 * Faces as dart cycles. A dart is 2*edge+0 for the stored (u,v) direction
 * and 2*edge+1 for (v,u); every dart lies on exactly one face.
 */
struct FaceSet {
    std::vector<std::vector<int>> faces;  // dart sequences
    int outer_face = 0;                   // longest face by default
};

/// Dual graph; loops (bridges) and parallel edges are allowed here.
struct DualGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // edge i is dual to primal edge i
};

bool is_planar(const Graph& g);

struct CComponent {
    std::vector<int> edges;        // edge ids off the cycle
    std::vector<int> attachments;  // cycle vertices touched, ascending
};

/// Decomposition of the off-cycle part of g relative to a simple cycle.
std::vector<CComponent> c_components(const Graph& g, const std::vector<int>& cycle);

/// One vertex per C-component, edges for the skew (interleaving) relation.
Graph interlacement_graph(const Graph& g, const std::vector<int>& cycle);

FaceSet faces_from_rotation(const Graph& g, const RotationSystem& rot);

DualGraph dual_graph(const Graph& g, const RotationSystem& rot);

/// The shortest-cycle dual construction (no embedding input).
DualGraph dual_graph_from_cycles(const Graph& g);

/// Shortest inner-face route between two faces (BFS on the dual minus outer).
std::vector<int> lee_path(const Graph& g, const RotationSystem& rot, int start_face, int end_face);

/// Helpers exposing canonical embeddings used as fixtures.
struct PlanarEmbedding {
    Graph g;
    RotationSystem rot;
};

RotationSystem rotation_from_coords(const Graph& g, const std::vector<std::array<double, 3>>& pos);
RotationSystem rotation_from_plane(const Graph& g, const std::vector<std::array<double, 2>>& pos);

PlanarEmbedding platonic_embedding(const std::string& name);
PlanarEmbedding grid_embedding(int k, int l);

int dart_tail(const Graph& g, int dart);
int dart_head(const Graph& g, int dart);

/// Degree multiset of a dual graph (loops count twice); sorted ascending.
std::vector<int> dual_degree_sequence(const DualGraph& d);

}  // namespace graphlib
