#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

/// Capacitated digraph with source and terminal; costs optional.
struct FlowNetwork {
    int n = 0;
    int source = 0;
    int terminal = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> capacities;
    std::vector<double> costs;  // empty when uncosted

    int m() const { return static_cast<int>(edges.size()); }
    bool costed() const { return !costs.empty(); }

    /// c(u,v) summed over parallel arcs (0 for non-edges).
    double capacity(int u, int v) const;
    double cost(int u, int v) const;
};

FlowNetwork build_network(int n, std::vector<std::pair<int, int>> edges,
                          std::vector<double> capacities, int source, int terminal,
                          std::vector<double> costs = {});

/// Skew-symmetric flow function f(u,v) = -f(v,u), stored densely.
struct Flow {
    int n = 0;
    std::vector<std::vector<double>> f;
    double value = 0;

    explicit Flow(int n_ = 0) : n(n_), f(n_, std::vector<double>(n_, 0.0)) {}
};

struct Cut {
    std::vector<int> a;  // side containing the source
    std::vector<int> b;
    double capacity = 0;
};

struct FlowViolation {
    bool ok = true;
    std::string kind;  // "skew_symmetry" | "capacity" | "conservation"
    int u = -1, v = -1;
};

FlowViolation validate_flow(const FlowNetwork& net, const Flow& f);

/// One path or cycle of a flow decomposition.
struct FlowPart {
    bool is_cycle = false;
    double amount = 0;
    std::vector<int> vertices;  // path s..t, or cycle (closed implicitly)
};

/// At most m parts whose pointwise sum reconstructs the positive part of f.
std::vector<FlowPart> decompose_flow(const FlowNetwork& net, const Flow& f);

enum class FlowStrategy { ford_fulkerson, edmonds_karp, dinic };

/**
 * Augmenting-path selector for ford_fulkerson: given the residual capacity
 * matrix, source and terminal, return an augmenting path as a vertex list
 * (or empty when giving up). Used to exercise pathological path choices.
 */
using PathSelector =
    std::function<std::vector<int>(const std::vector<std::vector<double>>&, int, int)>;

struct MaxFlowResult {
    Flow flow;
    int augmentations = 0;  // augmenting paths (FF/EK) or phases' paths (dinic)
};

MaxFlowResult max_flow(const FlowNetwork& net, FlowStrategy strategy,
                       const PathSelector& selector = {});

/// Level graph of the residual network of f from s (digraph on the same vertices).
Graph level_graph(const FlowNetwork& net, const Flow& f, int s);

Cut min_cut(const FlowNetwork& net);

enum class MinCostStrategy { cycle_canceling_ff, dinic_then_cancel };

struct MinCostResult {
    Flow flow;
    double cost = 0;
};

MinCostResult min_cost_max_flow(const FlowNetwork& net, MinCostStrategy strategy);

}  // namespace graphlib
