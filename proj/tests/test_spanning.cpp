#include <random>

#include "doctest.h"
#include "graphlib/spanning.hpp"
#include "graphlib/traversal.hpp"
#include "helpers.hpp"

using namespace graphlib;

namespace {

/// Minimum spanning tree weight by trying every edge subset of size n-1.
double mst_weight_oracle(const Graph& g) {
    int n = g.n, m = g.m();
    double best = -1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != n - 1) continue;
        std::vector<std::pair<int, int>> subset;
        double weight = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                subset.push_back(g.edges[e]);
                weight += g.weight(e);
            }
        if (!is_connected(build_graph(n, subset))) continue;
        if (best < 0 || weight < best) best = weight;
    }
    return best;
}

Graph random_weighted_connected(std::mt19937_64& rng, int n, int extra) {
    Graph skeleton = testutil::random_connected_graph(rng, n, extra);
    std::vector<double> weights;
    for (int e = 0; e < skeleton.m(); ++e)
        weights.push_back(1 + static_cast<int>(rng() % 9));
    return build_graph(skeleton.n, skeleton.edges, false, std::move(weights));
}

}  // namespace

TEST_CASE("prim and kruskal find a minimum spanning tree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_weighted_connected(rng, 6, static_cast<int>(rng() % 6));
        double oracle = mst_weight_oracle(g);
        TreeResult p = mst(g, MstStrategy::prim);
        TreeResult k = mst(g, MstStrategy::kruskal);
        CHECK(p.total_weight == doctest::Approx(oracle));
        CHECK(k.total_weight == doctest::Approx(oracle));
        // both results are spanning trees
        for (const TreeResult& t : {p, k}) {
            REQUIRE(t.edges.size() == static_cast<size_t>(g.n) - 1);
            std::vector<std::pair<int, int>> picked;
            for (int e : t.edges) picked.push_back(g.edges[e]);
            CHECK(is_connected(build_graph(g.n, picked)));
        }
    }
}

TEST_CASE("mst rejects bad inputs") {
    CHECK_THROWS_AS(mst(complete_graph(3), MstStrategy::prim), GraphError);  // unweighted
    Graph disconnected = build_graph(4, {{0, 1}, {2, 3}}, false, {1, 1});
    CHECK_THROWS_AS(mst(disconnected, MstStrategy::kruskal), GraphError);
    Graph directed = build_graph(2, {{0, 1}}, true, {1});
    CHECK_THROWS_AS(mst(directed, MstStrategy::prim), GraphError);
}

TEST_CASE("spanning tree counts match Cayley's formula") {
    unsigned long long expected = 1;
    for (int n = 2; n <= 8; ++n) {
        expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        CHECK(spanning_tree_count(complete_graph(n)) == expected);
    }
}

TEST_CASE("spanning tree counts match the bipartite closed form") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            unsigned long long expected = 1;
            for (int i = 0; i < m - 1; ++i) expected *= n;
            for (int i = 0; i < n - 1; ++i) expected *= m;
            CHECK(spanning_tree_count(complete_bipartite_graph(n, m)) == expected);
        }
}

TEST_CASE("kirchhoff agrees with subset enumeration") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(rng, n, static_cast<int>(rng() % 6));
        CHECK(spanning_tree_count(g) == spanning_tree_count_bruteforce(g));
    }
}

TEST_CASE("known small counts") {
    CHECK(spanning_tree_count(cycle_graph(5)) == 5);
    CHECK(spanning_tree_count(path_graph(6)) == 1);
    Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(spanning_tree_count(disconnected) == 0);
}

TEST_CASE("bruteforce oracle refuses oversized edge sets") {
    CHECK_THROWS_AS(spanning_tree_count_bruteforce(complete_graph(8)), GraphError);
}
