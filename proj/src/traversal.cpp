#include "graphlib/traversal.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace graphlib {

Traversal traverse(const Graph& g, int root, Order order) {
    if (root < 0 || root >= g.n) fail(errc::index_out_of_range, "root out of range");
    Traversal t;
    t.root = root;
    t.number.assign(g.n, 0);
    t.parent.assign(g.n, -1);
    int next_number = 0;
    auto assign = [&](int v) {
        t.number[v] = ++next_number;
        t.order.push_back(v);
    };

    if (order == Order::dfs) {
        std::function<void(int)> dfs = [&](int v) {
            assign(v);
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (t.number[w] == 0) {
                    t.parent[w] = v;
                    dfs(w);
                }
            }
        };
        dfs(root);
    } else {
        std::deque<int> queue{root};
        assign(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (t.number[w] == 0) {
                    t.parent[w] = v;
                    assign(w);
                    queue.push_back(w);
                }
            }
        }
    }
    return t;
}

namespace {

// Undirected adjacency view: for digraphs, both edge directions.
std::vector<std::vector<std::pair<int, int>>> weak_adj(const Graph& g) {
    if (!g.directed) return g.adj;
    std::vector<std::vector<std::pair<int, int>>> a(g.n);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        a[u].push_back({v, e});
        a[v].push_back({u, e});
    }
    for (auto& row : a) std::sort(row.begin(), row.end());
    return a;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    auto adj = weak_adj(g);
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<int> comp{s};
        comp_of[s] = static_cast<int>(comps.size());
        for (size_t head = 0; head < comp.size(); ++head)
            for (auto [w, e] : adj[comp[head]]) {
                (void)e;
                if (comp_of[w] < 0) {
                    comp_of[w] = comp_of[s];
                    comp.push_back(w);
                }
            }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<int>> spanning_forest(const Graph& g, Order order) {
    std::vector<std::vector<int>> forest;
    std::vector<char> seen(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        if (seen[root]) continue;
        Traversal t = traverse(g, root, order);
        std::vector<int> tree;
        for (int v : t.order) {
            seen[v] = 1;
            if (t.parent[v] >= 0) tree.push_back(g.edge_id(t.parent[v], v));
        }
        std::sort(tree.begin(), tree.end());
        forest.push_back(std::move(tree));
    }
    return forest;
}

Bipartition bipartite_partition(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "bipartite test needs an undirected graph");
    Bipartition b;
    std::vector<int> side(g.n, -1), parent(g.n, -1), depth(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        // Depth-first with alternating marks; a conflicting non-tree edge
        // closes an odd cycle through the tree path between its endpoints.
        std::function<bool(int)> dfs = [&](int v) -> bool {
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    if (!dfs(w)) return false;
                } else if (side[w] == side[v]) {
                    std::vector<int> up_v, up_w;
                    int a = v, c = w;
                    while (depth[a] > depth[c]) { up_v.push_back(a); a = parent[a]; }
                    while (depth[c] > depth[a]) { up_w.push_back(c); c = parent[c]; }
                    while (a != c) {
                        up_v.push_back(a); a = parent[a];
                        up_w.push_back(c); c = parent[c];
                    }
                    up_v.push_back(a);
                    std::reverse(up_w.begin(), up_w.end());
                    b.odd_cycle = std::move(up_v);
                    b.odd_cycle.insert(b.odd_cycle.end(), up_w.begin(), up_w.end());
                    // cycle runs w .. lca .. v, closed by the edge (v,w)
                    std::reverse(b.odd_cycle.begin(), b.odd_cycle.end());
                    return false;
                }
            }
            return true;
        };
        if (!dfs(root)) {
            b.bipartite = false;
            return b;
        }
    }
    b.bipartite = true;
    b.side = std::move(side);
    return b;
}

}  // namespace graphlib
