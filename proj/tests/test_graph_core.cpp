#include <functional>
#include <set>

#include "doctest.h"
#include "graphlib/exact.hpp"
#include "graphlib/graph.hpp"

using namespace graphlib;

namespace {

/// Walk counter by explicit depth-first enumeration.
long long walk_oracle(const Graph& g, int from, int to, int k) {
    if (k == 0) return from == to ? 1 : 0;
    long long total = 0;
    for (auto [w, e] : g.adj[from]) {
        (void)e;
        total += walk_oracle(g, w, to, k - 1);
    }
    return total;
}

}  // namespace

TEST_CASE("build_graph validates its input") {
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 0}}), doctest::Contains("loop"), GraphError);
    CHECK_THROWS_AS(build_graph(2, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(build_graph(2, {{0, 1}}, false, {0.0}), GraphError);
    CHECK_THROWS_AS(build_graph(2, {{0, 1}}, false, {1.0, 2.0}), GraphError);
}

TEST_CASE("undirected edges are normalized and adjacency is sorted") {
    Graph g = build_graph(4, {{3, 1}, {2, 0}, {1, 0}});
    CHECK(g.edges[0] == std::pair<int, int>{1, 3});
    CHECK(g.edge_id(3, 1) == 0);
    CHECK(g.edge_id(0, 2) == 1);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.adj[0][0].first == 1);
    CHECK(g.adj[0][1].first == 2);
}

TEST_CASE("directed graphs keep arc direction and reverse adjacency") {
    Graph g = build_graph(3, {{2, 0}, {0, 1}}, true);
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.radj[0].size() == 1);
    CHECK(g.radj[1].size() == 1);
    // antiparallel arcs are two distinct edges
    Graph h = build_graph(2, {{0, 1}, {1, 0}}, true);
    CHECK(h.m() == 2);
}

TEST_CASE("generated families have the expected shape") {
    CHECK(complete_graph(5).m() == 10);
    CHECK(complete_bipartite_graph(2, 3).m() == 6);
    CHECK(hypercube_graph(3).m() == 12);
    CHECK(grid_graph(2, 3).m() == 7);
    CHECK(path_graph(4).m() == 3);
    CHECK(cycle_graph(4).m() == 4);
    CHECK(generate("complete", {4}).m() == 6);
    CHECK_THROWS_AS(generate("klein_bottle", {3}), GraphError);
    CHECK_THROWS_AS(generate("complete", {}), GraphError);
}

TEST_CASE("platonic solids match the classical vertex and edge counts") {
    const std::vector<std::tuple<std::string, int, int>> table = {
        {"tetrahedron", 4, 6},  {"cube", 8, 12},         {"octahedron", 6, 12},
        {"dodecahedron", 20, 30}, {"icosahedron", 12, 30},
    };
    for (const auto& [name, v, e] : table) {
        SolidGraph solid = platonic_solid(name);
        CHECK(solid.g.n == v);
        CHECK(solid.g.m() == e);
        // vertex-transitive: regular of degree 2E/V
        for (int x = 0; x < solid.g.n; ++x) CHECK(solid.g.degree(x) == 2 * e / v);
    }
    CHECK_THROWS_AS(platonic_solid("teapot"), GraphError);
}

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(2, 4), b(1, 3);
    CHECK(a == Rational(1, 2));
    CHECK((a + b) == Rational(5, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2).num == -1);
    CHECK(b < a);
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(1, 0), GraphError);
}

TEST_CASE("adjacency matrix powers count walks") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    for (int k = 1; k <= 5; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(count_walks(g, i, j, k) == walk_oracle(g, i, j, k));
}

TEST_CASE("walk counting rejects weighted graphs") {
    Graph g = build_graph(2, {{0, 1}}, false, {2.5});
    CHECK_THROWS_AS(count_walks(g, 0, 1, 2), GraphError);
}

TEST_CASE("incidence matrix columns sum to zero for directed graphs") {
    Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
    ExactMatrix b = matrix(g, MatrixKind::incidence);
    for (int e = 0; e < g.m(); ++e) {
        Rational sum;
        for (int v = 0; v < g.n; ++v) sum = sum + b.at(v, e);
        CHECK(sum == Rational(0));
    }
}

TEST_CASE("laplacian equals oriented incidence times its transpose") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    std::vector<int> orientation(g.m(), 0);
    ExactMatrix b = matrix(g, MatrixKind::incidence, orientation);
    ExactMatrix l = matrix(g, MatrixKind::laplacian);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            Rational dot;
            for (int e = 0; e < g.m(); ++e) dot = dot + b.at(i, e) * b.at(j, e);
            CHECK(dot == l.at(i, j));
        }
}

TEST_CASE("laplacian row sums vanish and diagonal is the degree") {
    Graph g = complete_bipartite_graph(2, 3);
    ExactMatrix l = matrix(g, MatrixKind::laplacian);
    for (int i = 0; i < g.n; ++i) {
        Rational sum;
        for (int j = 0; j < g.n; ++j) sum = sum + l.at(i, j);
        CHECK(sum == Rational(0));
        CHECK(l.at(i, i) == Rational(g.degree(i)));
    }
}

TEST_CASE("degree sequence is ascending") {
    Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(degree_sequence(g) == std::vector<int>{1, 1, 1, 3});
}
