#include "graphlib/flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace graphlib {

namespace {

constexpr double kEps = 1e-12;
constexpr double kHuge = 1e300;

std::vector<std::vector<double>> dense_capacity(const FlowNetwork& net) {
    std::vector<std::vector<double>> c(net.n, std::vector<double>(net.n, 0.0));
    for (int e = 0; e < net.m(); ++e) c[net.edges[e].first][net.edges[e].second] += net.capacities[e];
    return c;
}

std::vector<std::vector<double>> dense_cost(const FlowNetwork& net) {
    std::vector<std::vector<double>> a(net.n, std::vector<double>(net.n, 0.0));
    for (int e = 0; e < net.m(); ++e) a[net.edges[e].first][net.edges[e].second] = net.costs[e];
    return a;
}

std::vector<int> bfs_path(const std::vector<std::vector<double>>& r, int s, int t) {
    int n = static_cast<int>(r.size());
    std::vector<int> pred(n, -1);
    pred[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == t) break;
        for (int w = 0; w < n; ++w)
            if (pred[w] < 0 && r[v][w] > kEps) {
                pred[w] = v;
                queue.push_back(w);
            }
    }
    if (pred[t] < 0) return {};
    std::vector<int> path;
    for (int v = t; v != s; v = pred[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> dfs_path(const std::vector<std::vector<double>>& r, int s, int t) {
    int n = static_cast<int>(r.size());
    std::vector<char> seen(n, 0);
    std::vector<int> path;
    bool found = false;
    auto rec = [&](auto&& self, int v) -> void {
        seen[v] = 1;
        path.push_back(v);
        if (v == t) {
            found = true;
            return;
        }
        for (int w = 0; w < n && !found; ++w)
            if (!seen[w] && r[v][w] > kEps) self(self, w);
        if (!found) path.pop_back();
    };
    rec(rec, s);
    return found ? path : std::vector<int>{};
}

double augment(std::vector<std::vector<double>>& r, const std::vector<int>& path) {
    double delta = kHuge;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        delta = std::min(delta, r[path[i]][path[i + 1]]);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        r[path[i]][path[i + 1]] -= delta;
        r[path[i + 1]][path[i]] += delta;
    }
    return delta;
}

Flow flow_from_residual(const FlowNetwork& net, const std::vector<std::vector<double>>& c,
                        const std::vector<std::vector<double>>& r) {
    // residual updates keep c - r skew-symmetric throughout
    Flow f(net.n);
    for (int u = 0; u < net.n; ++u)
        for (int v = 0; v < net.n; ++v) f.f[u][v] = c[u][v] - r[u][v];
    for (int v = 0; v < net.n; ++v) f.value += f.f[net.source][v];
    return f;
}

std::vector<int> residual_levels(const std::vector<std::vector<double>>& r, int s) {
    int n = static_cast<int>(r.size());
    std::vector<int> dist(n, -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < n; ++w)
            if (dist[w] < 0 && r[v][w] > kEps) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int dinic_run(std::vector<std::vector<double>>& r, int s, int t) {
    int n = static_cast<int>(r.size());
    int augmentations = 0;
    while (true) {
        std::vector<int> dist = residual_levels(r, s);
        if (dist[t] < 0) break;
        // blocking flow by repeated DFS over level-advancing edges
        std::vector<int> next(n, 0);
        std::vector<int> path{s};
        while (!path.empty()) {
            int v = path.back();
            if (v == t) {
                augment(r, path);
                ++augmentations;
                // restart from s; saturated edges are skipped by capacity check
                path = {s};
                continue;
            }
            bool advanced = false;
            while (next[v] < n) {
                int w = next[v];
                if (r[v][w] > kEps && dist[w] == dist[v] + 1) {
                    path.push_back(w);
                    advanced = true;
                    break;  // pointer advances only once the edge is dead
                }
                ++next[v];
            }
            if (!advanced) {
                dist[v] = -2;  // dead vertex for this phase
                path.pop_back();
            }
        }
    }
    return augmentations;
}

}  // namespace

double FlowNetwork::capacity(int u, int v) const {
    double c = 0;
    for (int e = 0; e < m(); ++e)
        if (edges[e].first == u && edges[e].second == v) c += capacities[e];
    return c;
}

double FlowNetwork::cost(int u, int v) const {
    if (!costed()) return 0;
    for (int e = 0; e < m(); ++e)
        if (edges[e].first == u && edges[e].second == v) return costs[e];
    return 0;
}

FlowNetwork build_network(int n, std::vector<std::pair<int, int>> edges,
                          std::vector<double> capacities, int source, int terminal,
                          std::vector<double> costs) {
    if (source < 0 || source >= n || terminal < 0 || terminal >= n)
        fail(errc::index_out_of_range, "source/terminal out of range");
    if (source == terminal) fail(errc::bad_params, "source equals terminal");
    if (capacities.size() != edges.size()) fail(errc::bad_params, "capacity list length mismatch");
    if (!costs.empty() && costs.size() != edges.size())
        fail(errc::bad_params, "cost list length mismatch");
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n) fail(errc::index_out_of_range, "edge out of range");
        if (u == v) fail(errc::loop_edge, "loop arc");
        if (!seen.insert({u, v}).second) fail(errc::duplicate_edge, "duplicate arc");
        if (capacities[i] <= 0) fail(errc::bad_params, "capacities of real edges must be positive");
    }
    FlowNetwork net;
    net.n = n;
    net.source = source;
    net.terminal = terminal;
    net.edges = std::move(edges);
    net.capacities = std::move(capacities);
    net.costs = std::move(costs);
    return net;
}

FlowViolation validate_flow(const FlowNetwork& net, const Flow& f) {
    FlowViolation rep;
    auto c = dense_capacity(net);
    for (int u = 0; u < net.n; ++u)
        for (int v = 0; v < net.n; ++v) {
            if (std::abs(f.f[u][v] + f.f[v][u]) > 1e-9) {
                rep = {false, "skew_symmetry", u, v};
                return rep;
            }
            if (f.f[u][v] > c[u][v] + 1e-9) {
                rep = {false, "capacity", u, v};
                return rep;
            }
        }
    for (int u = 0; u < net.n; ++u) {
        if (u == net.source || u == net.terminal) continue;
        double sum = 0;
        for (int v = 0; v < net.n; ++v) sum += f.f[u][v];
        if (std::abs(sum) > 1e-9) {
            rep = {false, "conservation", u, -1};
            return rep;
        }
    }
    return rep;
}

std::vector<FlowPart> decompose_flow(const FlowNetwork& net, const Flow& f) {
    FlowViolation v = validate_flow(net, f);
    if (!v.ok) fail(errc::invalid_flow, "flow violates " + v.kind);

    int n = net.n;
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p[a][b] = std::max(f.f[a][b], 0.0);

    std::vector<FlowPart> parts;
    auto subtract = [&](const std::vector<int>& verts, bool cycle, double amount) {
        size_t k = verts.size();
        for (size_t i = 0; i + 1 < k; ++i) p[verts[i]][verts[i + 1]] -= amount;
        if (cycle) p[verts.back()][verts.front()] -= amount;
        parts.push_back({cycle, amount, verts});
    };

    auto walk_from = [&](int start, bool to_terminal) {
        // follow positive arcs; peel off any cycle met along the way
        std::vector<int> path{start};
        std::vector<int> pos(n, -1);
        pos[start] = 0;
        while (true) {
            int v2 = path.back();
            if (to_terminal && v2 == net.terminal) {
                double amt = kHuge;
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    amt = std::min(amt, p[path[i]][path[i + 1]]);
                subtract(path, false, amt);
                return;
            }
            int nxt = -1;
            for (int w = 0; w < n; ++w)
                if (p[v2][w] > kEps) { nxt = w; break; }
            if (nxt < 0) return;  // dead end (numerical dust)
            if (pos[nxt] >= 0) {
                // peel the cycle path[pos[nxt]..end] -> nxt off the walk
                int idx = pos[nxt];
                std::vector<int> cyc(path.begin() + idx, path.end());
                double amt = kHuge;
                for (size_t i = 0; i + 1 < cyc.size(); ++i)
                    amt = std::min(amt, p[cyc[i]][cyc[i + 1]]);
                amt = std::min(amt, p[cyc.back()][cyc.front()]);
                subtract(cyc, true, amt);
                for (size_t i = idx + 1; i < path.size(); ++i) pos[path[i]] = -1;
                path.resize(idx + 1);
                continue;
            }
            pos[nxt] = static_cast<int>(path.size());
            path.push_back(nxt);
        }
    };

    // path parts first: drain everything leaving the source
    int guard = 4 * net.m() + 8;
    while (guard-- > 0) {
        bool any = false;
        for (int w = 0; w < n; ++w)
            if (p[net.source][w] > kEps) { any = true; break; }
        if (!any) break;
        walk_from(net.source, true);
    }
    // remaining positive arcs belong to circulations
    for (int u = 0; u < n && guard > 0; ++u)
        for (int w = 0; w < n && guard > 0; ++w)
            while (p[u][w] > kEps && guard-- > 0) walk_from(u, false);
    return parts;
}

MaxFlowResult max_flow(const FlowNetwork& net, FlowStrategy strategy, const PathSelector& selector) {
    auto c = dense_capacity(net);
    auto r = c;
    int s = net.source, t = net.terminal;
    int augmentations = 0;

    if (strategy == FlowStrategy::dinic) {
        augmentations = dinic_run(r, s, t);
    } else {
        while (true) {
            std::vector<int> path;
            if (strategy == FlowStrategy::edmonds_karp)
                path = bfs_path(r, s, t);
            else if (selector)
                path = selector(r, s, t);
            else
                path = dfs_path(r, s, t);
            if (path.empty()) break;
            augment(r, path);
            ++augmentations;
        }
    }
    return {flow_from_residual(net, c, r), augmentations};
}

Graph level_graph(const FlowNetwork& net, const Flow& f, int s) {
    auto c = dense_capacity(net);
    std::vector<std::vector<double>> r(net.n, std::vector<double>(net.n));
    for (int u = 0; u < net.n; ++u)
        for (int v = 0; v < net.n; ++v) r[u][v] = c[u][v] - f.f[u][v];
    std::vector<int> dist = residual_levels(r, s);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < net.n; ++u)
        for (int v = 0; v < net.n; ++v)
            if (r[u][v] > kEps && dist[u] >= 0 && dist[v] == dist[u] + 1) arcs.push_back({u, v});
    return build_graph(net.n, std::move(arcs), true);
}

Cut min_cut(const FlowNetwork& net) {
    auto c = dense_capacity(net);
    auto r = c;
    dinic_run(r, net.source, net.terminal);
    std::vector<int> dist = residual_levels(r, net.source);
    Cut cut;
    for (int v = 0; v < net.n; ++v)
        (dist[v] >= 0 ? cut.a : cut.b).push_back(v);
    for (int u : cut.a)
        for (int v : cut.b) cut.capacity += c[u][v];
    return cut;
}

namespace {

struct ResidualCost {
    std::vector<std::vector<double>> r;
    std::vector<std::vector<double>> c;
    std::vector<std::vector<double>> a;

    // residual arc cost: forward real arcs cost a, pure reverse arcs refund
    double arc_cost(int u, int v) const { return c[u][v] > 0 ? a[u][v] : -a[v][u]; }
};

std::vector<int> find_negative_cycle(const ResidualCost& rc) {
    int n = static_cast<int>(rc.r.size());
    std::vector<double> dist(n, 0.0);
    std::vector<int> pred(n, -1);
    int touched = -1;
    for (int pass = 0; pass < n; ++pass) {
        touched = -1;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rc.r[u][v] > kEps && dist[u] + rc.arc_cost(u, v) < dist[v] - 1e-12) {
                    dist[v] = dist[u] + rc.arc_cost(u, v);
                    pred[v] = u;
                    touched = v;
                }
        if (touched < 0) return {};
    }
    int x = touched;
    for (int i = 0; i < n; ++i) x = pred[x];
    std::vector<int> cyc;
    for (int v = x; cyc.empty() || v != x; v = pred[v]) cyc.push_back(v);
    std::reverse(cyc.begin(), cyc.end());
    return cyc;
}

void cancel_cycles(ResidualCost& rc) {
    for (int guard = 0; guard < 100000; ++guard) {
        std::vector<int> cyc = find_negative_cycle(rc);
        if (cyc.empty()) return;
        double delta = 1e300;
        size_t k = cyc.size();
        for (size_t i = 0; i < k; ++i) delta = std::min(delta, rc.r[cyc[i]][cyc[(i + 1) % k]]);
        for (size_t i = 0; i < k; ++i) {
            rc.r[cyc[i]][cyc[(i + 1) % k]] -= delta;
            rc.r[cyc[(i + 1) % k]][cyc[i]] += delta;
        }
    }
    fail(errc::unbounded_cost, "negative-cycle canceling did not terminate");
}

// cheapest s->t path over residual arcs (Bellman-Ford, costs may be negative)
std::vector<int> cheapest_path(const ResidualCost& rc, int s, int t) {
    int n = static_cast<int>(rc.r.size());
    std::vector<double> dist(n, kHuge);
    std::vector<int> pred(n, -1);
    dist[s] = 0;
    for (int pass = 0; pass + 1 < n; ++pass) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            if (dist[u] >= kHuge) continue;
            for (int v = 0; v < n; ++v)
                if (rc.r[u][v] > kEps && dist[u] + rc.arc_cost(u, v) < dist[v] - 1e-12) {
                    dist[v] = dist[u] + rc.arc_cost(u, v);
                    pred[v] = u;
                    changed = true;
                }
        }
        if (!changed) break;
    }
    if (dist[t] >= kHuge) return {};
    std::vector<int> path;
    for (int v = t; v != s; v = pred[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

MinCostResult min_cost_max_flow(const FlowNetwork& net, MinCostStrategy strategy) {
    if (!net.costed()) fail(errc::bad_params, "network has no costs");
    for (auto [u, v] : net.edges)
        for (auto [x, y] : net.edges)
            if (u == y && v == x)
                fail(errc::bad_params, "antiparallel arcs unsupported in costed networks");

    ResidualCost rc{dense_capacity(net), {}, dense_cost(net)};
    rc.c = rc.r;
    int s = net.source, t = net.terminal;

    if (strategy == MinCostStrategy::dinic_then_cancel) {
        dinic_run(rc.r, s, t);
        cancel_cycles(rc);
    } else {
        // zero flow has an empty residual history; still cancel any negative
        // cost cycle of the raw network first, then successive cheapest paths
        cancel_cycles(rc);
        for (int guard = 0; guard < 100000; ++guard) {
            std::vector<int> path = cheapest_path(rc, s, t);
            if (path.empty()) break;
            augment(rc.r, path);
        }
    }

    MinCostResult result{flow_from_residual(net, rc.c, rc.r), 0.0};
    for (int u = 0; u < net.n; ++u)
        for (int v = 0; v < net.n; ++v)
            if (result.flow.f[u][v] > kEps && rc.c[u][v] > 0)
                result.cost += result.flow.f[u][v] * rc.a[u][v];
    return result;
}

}  // namespace graphlib
