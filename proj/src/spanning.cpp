#include "graphlib/spanning.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "graphlib/traversal.hpp"

namespace graphlib {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void check_mst_input(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "mst needs an undirected graph");
    if (!g.weighted()) fail(errc::unweighted, "mst needs edge weights");
    if (!is_connected(g)) fail(errc::disconnected, "mst needs a connected graph");
}

TreeResult mst_prim(const Graph& g) {
    TreeResult r;
    std::vector<char> in_tree(g.n, 0);
    in_tree[0] = 1;
    // (weight, edge id, new vertex): edge id breaks weight ties.
    using Entry = std::tuple<double, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    auto push_edges = [&](int v) {
        for (auto [w, e] : g.adj[v])
            if (!in_tree[w]) frontier.push({g.weights[e], e, w});
    };
    push_edges(0);
    while (static_cast<int>(r.edges.size()) + 1 < g.n) {
        auto [wt, e, v] = frontier.top();
        frontier.pop();
        if (in_tree[v]) continue;
        in_tree[v] = 1;
        r.edges.push_back(e);
        r.total_weight += wt;
        push_edges(v);
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

TreeResult mst_kruskal(const Graph& g) {
    TreeResult r;
    std::vector<int> ids(g.m());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return g.weights[a] < g.weights[b]; });
    DisjointSet ds(g.n);
    for (int e : ids) {
        auto [u, v] = g.edges[e];
        if (ds.unite(u, v)) {
            r.edges.push_back(e);
            r.total_weight += g.weights[e];
        }
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

}  // namespace

TreeResult mst(const Graph& g, MstStrategy strategy) {
    check_mst_input(g);
    return strategy == MstStrategy::prim ? mst_prim(g) : mst_kruskal(g);
}

unsigned long long spanning_tree_count(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "spanning tree count needs an undirected graph");
    if (g.weighted()) fail(errc::kind_unsupported, "spanning tree count needs an unweighted graph");
    if (g.n == 0) return 0;
    if (g.n == 1) return 1;
    if (!is_connected(g)) return 0;

    // Laplacian with last row/column deleted; Bareiss fraction-free
    // elimination keeps every intermediate value an exact integer.
    using i128 = __int128;
    int n = g.n - 1;
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n, 0));
    for (int v = 0; v < n; ++v) a[v][v] = g.degree(v);
    for (auto [u, v] : g.edges)
        if (u < n && v < n) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }

    const i128 limit = i128(1) << 126;
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                i128 num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                if (num > limit || -num > limit) fail(errc::too_large, "determinant overflow");
                a[i][j] = num / prev;
            }
        prev = a[k][k];
    }
    i128 det = sign * a[n - 1][n - 1];
    if (det < 0 || det > i128(UINT64_MAX)) fail(errc::too_large, "spanning tree count overflow");
    return static_cast<unsigned long long>(det);
}

unsigned long long spanning_tree_count_bruteforce(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "oracle needs an undirected graph");
    if (g.m() > 24) fail(errc::too_large, "oracle limited to 24 edges");
    if (g.n == 0) return 0;
    if (g.n == 1) return 1;
    int need = g.n - 1;
    if (g.m() < need) return 0;

    unsigned long long count = 0;
    std::vector<int> pick(need);
    // enumerate edge subsets of size n-1 via combinations
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == need) {
            DisjointSet ds(g.n);
            int merged = 0;
            for (int i = 0; i < need; ++i) {
                auto [u, v] = g.edges[pick[i]];
                if (ds.unite(u, v)) ++merged;
            }
            if (merged == need) ++count;
            return;
        }
        for (int e = start; e <= g.m() - (need - chosen); ++e) {
            pick[chosen] = e;
            rec(e + 1, chosen + 1);
        }
    };
    rec(0, 0);
    return count;
}

}  // namespace graphlib
