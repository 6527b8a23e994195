#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

enum class EulerKind { eulerian_cycle, eulerian_path, none };

struct EulerClassification {
    EulerKind kind = EulerKind::none;
    std::vector<int> odd_vertices;
    std::pair<int, int> endpoints{-1, -1};  // set for eulerian_path
};

EulerClassification eulerian_classify(const Graph& g);

enum class EulerStrategy { cycle_stack, fleury, two_stacks };

/**
 * Eulerian cycle as a sequence of directed edge traversals (u,v); uses every
 * edge exactly once, consecutive entries chain, last returns to the start.
 */
std::vector<std::pair<int, int>> eulerian_cycle(const Graph& g, EulerStrategy strategy);

/// Open trail between the two odd vertices, via the virtual-edge reduction.
std::vector<std::pair<int, int>> eulerian_path(const Graph& g);

enum class HamiltonCriterion { ore, dirac, bondy_chvatal };

/// true = Hamiltonian guaranteed by the criterion; false = inconclusive.
bool hamiltonian_sufficient(const Graph& g, HamiltonCriterion criterion);

/**
 * Backtracking oracle. `max_n` bounds the accepted size (default 12); sparse
 * larger instances may opt in with a higher limit.
 */
std::optional<std::vector<int>> hamiltonian_cycle_bruteforce(const Graph& g, int max_n = 12);

}  // namespace graphlib
