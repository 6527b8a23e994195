#include "graphlib/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace graphlib {

int Graph::edge_id(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return -1;
    if (!directed && u > v) std::swap(u, v);
    for (auto [w, e] : adj[u])
        if (w == v) return e;
    return -1;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges, bool directed,
                  std::vector<double> weights) {
    if (n < 0) fail(errc::bad_params, "negative vertex count");
    if (!weights.empty() && weights.size() != edges.size())
        fail(errc::bad_params, "weights length must equal edge count");

    Graph g;
    g.n = n;
    g.directed = directed;
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::index_out_of_range,
                 "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) fail(errc::loop_edge, "self-loop at vertex " + std::to_string(u));
        if (!directed && u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            fail(errc::duplicate_edge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (!weights.empty() && weights[i] == 0.0)
            fail(errc::zero_weight, "zero weight on edge " + std::to_string(i));
        edges[i] = {u, v};
    }
    g.edges = std::move(edges);
    g.weights = std::move(weights);

    g.adj.assign(n, {});
    if (directed) g.radj.assign(n, {});
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        g.adj[u].push_back({v, e});
        if (directed)
            g.radj[v].push_back({u, e});
        else
            g.adj[v].push_back({u, e});
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    for (auto& a : g.radj) std::sort(a.begin(), a.end());
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) fail(errc::bad_params, "complete(n) needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return build_graph(n, std::move(e));
}

Graph complete_bipartite_graph(int n, int m) {
    if (n < 1 || m < 1) fail(errc::bad_params, "complete_bipartite(n,m) needs n,m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) e.push_back({u, n + v});
    return build_graph(n + m, std::move(e));
}

Graph hypercube_graph(int n) {
    if (n < 1 || n > 20) fail(errc::bad_params, "hypercube(n) needs 1 <= n <= 20");
    int size = 1 << n;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < size; ++u)
        for (int b = 0; b < n; ++b) {
            int v = u ^ (1 << b);
            if (u < v) e.push_back({u, v});
        }
    return build_graph(size, std::move(e));
}

Graph grid_graph(int k, int l) {
    if (k < 1 || l < 1) fail(errc::bad_params, "grid(k,l) needs k,l >= 1");
    auto id = [l](int i, int j) { return i * l + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            if (j + 1 < l) e.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < k) e.push_back({id(i, j), id(i + 1, j)});
        }
    return build_graph(k * l, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) fail(errc::bad_params, "path(n) needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return build_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) fail(errc::bad_params, "cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    e.push_back({0, n - 1});
    return build_graph(n, std::move(e));
}

const std::vector<std::string>& platonic_names() {
    static const std::vector<std::string> names = {"tetrahedron", "octahedron", "icosahedron",
                                                   "cube", "dodecahedron"};
    return names;
}

namespace {

using Point = std::array<double, 3>;

double dist2(const Point& a, const Point& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

std::vector<Point> solid_coords(const std::string& name) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point> p;
    if (name == "tetrahedron") {
        p = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (name == "cube") {
        for (int s = 0; s < 8; ++s)
            p.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
    } else if (name == "octahedron") {
        p = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    } else if (name == "icosahedron") {
        for (int a = 0; a < 3; ++a)
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    Point q{};
                    q[a] = 0;
                    q[(a + 1) % 3] = s1;
                    q[(a + 2) % 3] = s2 * phi;
                    p.push_back(q);
                }
    } else if (name == "dodecahedron") {
        for (int s = 0; s < 8; ++s)
            p.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
        for (int a = 0; a < 3; ++a)
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    Point q{};
                    q[a] = 0;
                    q[(a + 1) % 3] = s1 / phi;
                    q[(a + 2) % 3] = s2 * phi;
                    p.push_back(q);
                }
    } else {
        fail(errc::unknown_family, "not a platonic solid: " + name);
    }
    return p;
}

}  // namespace

SolidGraph platonic_solid(const std::string& name) {
    auto coords = solid_coords(name);
    int n = static_cast<int>(coords.size());
    // Edges connect vertex pairs at the minimal pairwise distance.
    double best = 1e300;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) best = std::min(best, dist2(coords[u], coords[v]));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist2(coords[u], coords[v]) < best * 1.02) e.push_back({u, v});
    return {build_graph(n, std::move(e)), std::move(coords)};
}

Graph generate(const std::string& family, const std::vector<long long>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            fail(errc::bad_params, family + " takes " + std::to_string(k) + " parameter(s)");
    };
    auto as_int = [&](size_t i) {
        if (params[i] < 1 || params[i] > 1000000) fail(errc::bad_params, "parameter out of range");
        return static_cast<int>(params[i]);
    };
    if (family == "complete") { want(1); return complete_graph(as_int(0)); }
    if (family == "complete_bipartite") { want(2); return complete_bipartite_graph(as_int(0), as_int(1)); }
    if (family == "hypercube") { want(1); return hypercube_graph(as_int(0)); }
    if (family == "grid") { want(2); return grid_graph(as_int(0), as_int(1)); }
    if (family == "path") { want(1); return path_graph(as_int(0)); }
    if (family == "cycle") { want(1); return cycle_graph(as_int(0)); }
    for (const auto& name : platonic_names())
        if (family == name) { want(0); return platonic_solid(name).g; }
    fail(errc::unknown_family, family);
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace graphlib
