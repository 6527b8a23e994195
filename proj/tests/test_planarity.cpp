#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "graphlib/planarity.hpp"
#include "graphlib/traversal.hpp"
#include "helpers.hpp"

using namespace graphlib;

namespace {

int face_count(const Graph& g, const RotationSystem& rot) {
    return static_cast<int>(faces_from_rotation(g, rot).faces.size());
}

/**
 * Planarity oracle: a connected graph is planar iff some rotation system
 * traces out V - E + F = 2 faces. Enumerates all cyclic orders per vertex.
 */
bool planar_oracle(const Graph& g) {
    int vertices = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 0) ++vertices;
    if (vertices >= 3 && g.m() > 3 * vertices - 6) return false;
    if (g.m() <= 2) return true;

    RotationSystem rot;
    rot.order.assign(g.n, {});
    for (int v = 0; v < g.n; ++v)
        for (auto [w, e] : g.adj[v]) {
            (void)w;
            rot.order[v].push_back(e);
        }
    // first incident edge stays put: cyclic orders, not linear ones
    std::function<bool(int)> search = [&](int v) -> bool {
        if (v == g.n) return g.n - g.m() + face_count(g, rot) == 2;
        if (rot.order[v].size() <= 2) return search(v + 1);
        std::vector<int> tail(rot.order[v].begin() + 1, rot.order[v].end());
        std::sort(tail.begin(), tail.end());
        do {
            std::copy(tail.begin(), tail.end(), rot.order[v].begin() + 1);
            if (search(v + 1)) return true;
        } while (std::next_permutation(tail.begin(), tail.end()));
        return false;
    };
    return search(0);
}

/// Subdivide random edges of g by fresh degree-2 vertices.
Graph subdivide(std::mt19937_64& rng, const Graph& g, int times) {
    std::vector<std::pair<int, int>> edges = g.edges;
    int n = g.n;
    for (int step = 0; step < times; ++step) {
        size_t pick = rng() % edges.size();
        auto [u, v] = edges[pick];
        edges[pick] = {u, n};
        edges.push_back({n, v});
        ++n;
    }
    return build_graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("textbook planar catalogue") {
    CHECK(is_planar(complete_graph(2)));
    CHECK(is_planar(complete_graph(3)));
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(complete_bipartite_graph(1, 2)));
    CHECK(is_planar(complete_bipartite_graph(1, 3)));
    CHECK(is_planar(complete_bipartite_graph(2, 2)));
    CHECK(is_planar(complete_bipartite_graph(2, 3)));
    for (const std::string& name : platonic_names()) CHECK(is_planar(platonic_solid(name).g));
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 4; ++l) CHECK(is_planar(grid_graph(k, l)));
}

TEST_CASE("the two forbidden graphs and their subdivisions") {
    Graph k5 = complete_graph(5);
    Graph k33 = complete_bipartite_graph(3, 3);
    CHECK_FALSE(is_planar(k5));
    CHECK_FALSE(is_planar(k33));
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        CHECK_FALSE(is_planar(subdivide(rng, k5, 1 + static_cast<int>(rng() % 8))));
        CHECK_FALSE(is_planar(subdivide(rng, k33, 1 + static_cast<int>(rng() % 8))));
    }
}

TEST_CASE("planarity matches the rotation-system oracle exhaustively for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.push_back({u, v});
        for (unsigned mask = 0; mask < (1u << slots); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < slots; ++e)
                if (mask >> e & 1) edges.push_back(all[e]);
            Graph g = build_graph(n, std::move(edges));
            if (!is_connected(g)) continue;
            CHECK(is_planar(g) == planar_oracle(g));
        }
    }
}

TEST_CASE("planarity matches the oracle on random graphs with 6 and 7 vertices") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        int m = n - 1 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_connected_graph(rng, n, m - (n - 1));
        CHECK(is_planar(g) == planar_oracle(g));
    }
}

TEST_CASE("c-components of a cycle in K_5 are its five chords") {
    Graph k5 = complete_graph(5);
    std::vector<int> cycle{0, 1, 2, 3, 4};
    auto comps = c_components(k5, cycle);
    REQUIRE(comps.size() == 5);
    for (const CComponent& c : comps) {
        CHECK(c.edges.size() == 1);
        CHECK(c.attachments.size() == 2);
    }
    Graph inter = interlacement_graph(k5, cycle);
    CHECK_FALSE(bipartite_partition(inter).bipartite);  // odd conflict cycle
}

TEST_CASE("c-components validate the cycle argument") {
    CHECK_THROWS_AS(c_components(complete_graph(4), {0, 1}), GraphError);
    CHECK_THROWS_AS(c_components(complete_graph(4), {0, 1, 1}), GraphError);
    CHECK_THROWS_AS(c_components(path_graph(4), {0, 1, 3}), GraphError);
}

TEST_CASE("face tracing on the platonic embeddings recovers the classical table") {
    const std::map<std::string, std::tuple<int, int, int>> table = {
        {"tetrahedron", {4, 6, 4}},   {"cube", {8, 12, 6}},       {"octahedron", {6, 12, 8}},
        {"dodecahedron", {20, 30, 12}}, {"icosahedron", {12, 30, 20}},
    };
    for (const auto& [name, vef] : table) {
        PlanarEmbedding emb = platonic_embedding(name);
        auto [v, e, f] = vef;
        CHECK(emb.g.n == v);
        CHECK(emb.g.m() == e);
        FaceSet fs = faces_from_rotation(emb.g, emb.rot);
        CHECK(static_cast<int>(fs.faces.size()) == f);
        CHECK(v - e + static_cast<int>(fs.faces.size()) == 2);
        // every face of a platonic embedding has the same length
        for (const auto& face : fs.faces) CHECK(static_cast<int>(face.size()) == 2 * e / f);
    }
}

TEST_CASE("grid embeddings satisfy the euler formula") {
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 4; ++l) {
            PlanarEmbedding emb = grid_embedding(k, l);
            FaceSet fs = faces_from_rotation(emb.g, emb.rot);
            CHECK(emb.g.n - emb.g.m() + static_cast<int>(fs.faces.size()) == 2);
            CHECK(static_cast<int>(fs.faces.size()) == (k - 1) * (l - 1) + 1);
        }
}

TEST_CASE("rotation systems are validated") {
    PlanarEmbedding emb = grid_embedding(2, 2);
    RotationSystem bad = emb.rot;
    bad.order[0].pop_back();
    CHECK_THROWS_AS(faces_from_rotation(emb.g, bad), GraphError);
}

TEST_CASE("dual of the cube is the octahedron, dual of the dodecahedron the icosahedron") {
    const std::map<std::string, std::string> pairs = {
        {"cube", "octahedron"}, {"dodecahedron", "icosahedron"}, {"tetrahedron", "tetrahedron"},
        {"octahedron", "cube"}, {"icosahedron", "dodecahedron"},
    };
    for (const auto& [primal_name, dual_name] : pairs) {
        PlanarEmbedding emb = platonic_embedding(primal_name);
        DualGraph dual = dual_graph(emb.g, emb.rot);
        SolidGraph expected = platonic_solid(dual_name);
        CHECK(dual.n == expected.g.n);
        CHECK(dual.edges.size() == static_cast<size_t>(expected.g.m()));
        CHECK(dual_degree_sequence(dual) == degree_sequence(expected.g));
    }
}

TEST_CASE("dual from shortest cycles agrees with the embedding dual on solids") {
    for (const std::string name : {"cube", "dodecahedron", "tetrahedron"}) {
        PlanarEmbedding emb = platonic_embedding(name);
        DualGraph from_rotation = dual_graph(emb.g, emb.rot);
        DualGraph from_cycles = dual_graph_from_cycles(emb.g);
        CHECK(from_cycles.n == from_rotation.n);
        CHECK(dual_degree_sequence(from_cycles) == dual_degree_sequence(from_rotation));
    }
}

TEST_CASE("dual from cycles handles degenerate shapes") {
    // triangle: one inner face, one outer; three parallel dual edges
    DualGraph tri = dual_graph_from_cycles(cycle_graph(3));
    CHECK(tri.n == 2);
    CHECK(tri.edges.size() == 3);
    for (auto [u, v] : tri.edges) CHECK(u != v);

    // tree: every edge is a bridge, so every dual edge is a loop at the
    // single face
    DualGraph tree = dual_graph_from_cycles(path_graph(5));
    CHECK(tree.n == 1);
    for (auto [u, v] : tree.edges) CHECK(u == v);

    CHECK_THROWS_AS(dual_graph_from_cycles(complete_graph(5)), GraphError);
}

TEST_CASE("dual vertex count always matches the euler formula on random planar graphs") {
    std::mt19937_64 rng(59);
    int built = 0;
    for (int trial = 0; trial < 400 && built < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(rng, n, static_cast<int>(rng() % 6));
        if (!is_planar(g)) continue;
        DualGraph dual;
        try {
            dual = dual_graph_from_cycles(g);
        } catch (const GraphError& e) {
            // the construction refuses graphs whose shortest cycles do not
            // bound faces; a refusal is acceptable, a wrong dual is not
            CHECK(e.code() == errc::ambiguous_representation);
            continue;
        }
        ++built;
        CHECK(dual.n == g.m() - g.n + 2);
        CHECK(dual.edges.size() == static_cast<size_t>(g.m()));
    }
    CHECK(built >= 40);
}

TEST_CASE("lee path routes between inner faces of a grid") {
    PlanarEmbedding emb = grid_embedding(3, 4);
    FaceSet fs = faces_from_rotation(emb.g, emb.rot);
    std::vector<int> inner;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
        if (f != fs.outer_face) inner.push_back(f);
    REQUIRE(inner.size() == 6);
    std::vector<int> path = lee_path(emb.g, emb.rot, inner.front(), inner.back());
    CHECK(path.front() == inner.front());
    CHECK(path.back() == inner.back());
    // consecutive faces share an edge in the dual
    DualGraph dual = dual_graph(emb.g, emb.rot);
    std::set<std::pair<int, int>> dual_edges;
    for (auto [u, v] : dual.edges) {
        dual_edges.insert({u, v});
        dual_edges.insert({v, u});
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) CHECK(dual_edges.count({path[i], path[i + 1]}));
    // a 2x4 grid has 3 inner faces in a row: the route between the ends has
    // length 3
    PlanarEmbedding strip = grid_embedding(2, 4);
    FaceSet sfs = faces_from_rotation(strip.g, strip.rot);
    std::vector<int> sinner;
    for (int f = 0; f < static_cast<int>(sfs.faces.size()); ++f)
        if (f != sfs.outer_face) sinner.push_back(f);
    CHECK(lee_path(strip.g, strip.rot, sinner.front(), sinner.back()).size() == 3);
}

TEST_CASE("lee path rejects outer-face endpoints") {
    PlanarEmbedding emb = grid_embedding(3, 3);
    FaceSet fs = faces_from_rotation(emb.g, emb.rot);
    int inner = fs.outer_face == 0 ? 1 : 0;
    CHECK_THROWS_AS(lee_path(emb.g, emb.rot, fs.outer_face, inner), GraphError);
    CHECK_THROWS_AS(lee_path(emb.g, emb.rot, inner, fs.outer_face), GraphError);
}

TEST_CASE("lee path refuses non-simple inner duals") {
    // triangle: both inner-minus-outer candidates collapse; asking for a path
    // needs at least two inner faces, and the 2x2 grid dual minus the outer
    // face is a single vertex
    PlanarEmbedding emb = grid_embedding(2, 3);
    FaceSet fs = faces_from_rotation(emb.g, emb.rot);
    std::vector<int> inner;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
        if (f != fs.outer_face) inner.push_back(f);
    REQUIRE(inner.size() == 2);
    CHECK(lee_path(emb.g, emb.rot, inner[0], inner[1]).size() == 2);
}
