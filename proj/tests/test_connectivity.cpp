#include <algorithm>
#include <random>

#include "doctest.h"
#include "graphlib/connectivity.hpp"
#include "graphlib/traversal.hpp"
#include "helpers.hpp"

using namespace graphlib;

namespace {

/// Bridge oracle: an edge is a bridge iff removing it splits its component.
std::vector<int> bridges_oracle(const Graph& g) {
    std::vector<int> out;
    size_t before = connected_components(g).size();
    for (int e = 0; e < g.m(); ++e) {
        std::vector<std::pair<int, int>> rest;
        for (int f = 0; f < g.m(); ++f)
            if (f != e) rest.push_back(g.edges[f]);
        if (connected_components(build_graph(g.n, rest)).size() > before) out.push_back(e);
    }
    return out;
}

std::vector<int> cut_vertices_oracle(const Graph& g) {
    std::vector<int> out;
    size_t before = connected_components(g).size();
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<int, int>> rest;
        for (auto [a, b] : g.edges)
            if (a != v && b != v) rest.push_back({a, b});
        // removing v also removes it from the vertex count: compare components
        // among the remaining vertices only
        Graph h = build_graph(g.n, rest);
        size_t comps = 0;
        std::vector<char> seen(g.n, 0);
        for (int s = 0; s < g.n; ++s) {
            if (s == v || seen[s]) continue;
            ++comps;
            Traversal t = traverse(h, s, Order::bfs);
            for (int w = 0; w < g.n; ++w)
                if (t.number[w] > 0) seen[w] = 1;
        }
        if (comps > before) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("tarjan low values certify bridges on a lollipop") {
    // triangle 0-1-2 with a tail 2-3-4
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    LowReport rep = tarjan_low(g);
    CHECK(rep.bridges == std::vector<int>{3, 4});
    CHECK(rep.cut_vertices == std::vector<int>{2, 3});
}

TEST_CASE("tarjan agrees with deletion oracles") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testutil::random_graph(rng, 8, static_cast<int>(rng() % 14));
        LowReport rep = tarjan_low(g);
        std::vector<int> bridges = rep.bridges;
        std::sort(bridges.begin(), bridges.end());
        CHECK(bridges == bridges_oracle(g));
        CHECK(rep.cut_vertices == cut_vertices_oracle(g));
    }
}

TEST_CASE("connectivity of complete and complete bipartite graphs") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(vertex_connectivity(complete_graph(n)) == n - 1);
        CHECK(edge_connectivity(complete_graph(n)) == n - 1);
    }
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            if (n + m < 2) continue;
            CHECK(vertex_connectivity(complete_bipartite_graph(n, m)) == std::min(n, m));
            CHECK(edge_connectivity(complete_bipartite_graph(n, m)) == std::min(n, m));
        }
}

TEST_CASE("kappa <= lambda <= min degree") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_connected_graph(rng, n, static_cast<int>(rng() % 8));
        int kappa = vertex_connectivity(g);
        int lambda = edge_connectivity(g);
        int delta = g.n;
        for (int v = 0; v < g.n; ++v) delta = std::min(delta, g.degree(v));
        CHECK(kappa <= lambda);
        CHECK(lambda <= delta);
        CHECK(kappa >= 1);
    }
}

TEST_CASE("disconnected graphs have zero connectivity") {
    Graph g = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(vertex_connectivity(g) == 0);
    CHECK(edge_connectivity(g) == 0);
}

TEST_CASE("every (kappa, lambda, d) triple is realized by the construction") {
    for (int d = 1; d <= 6; ++d)
        for (int lambda = 1; lambda <= d; ++lambda)
            for (int kappa = 1; kappa <= lambda; ++kappa) {
                Graph g = construct_kld_graph(kappa, lambda, d);
                CHECK(vertex_connectivity(g) == kappa);
                CHECK(edge_connectivity(g) == lambda);
                int delta = g.n;
                for (int v = 0; v < g.n; ++v) delta = std::min(delta, g.degree(v));
                CHECK(delta == d);
            }
    CHECK_THROWS_AS(construct_kld_graph(3, 2, 4), GraphError);
}
