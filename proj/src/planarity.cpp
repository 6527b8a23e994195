#include "graphlib/planarity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "graphlib/connectivity.hpp"
#include "graphlib/traversal.hpp"

namespace graphlib {

int dart_tail(const Graph& g, int dart) {
    auto [u, v] = g.edges[dart >> 1];
    return (dart & 1) ? v : u;
}

int dart_head(const Graph& g, int dart) {
    auto [u, v] = g.edges[dart >> 1];
    return (dart & 1) ? u : v;
}

namespace {

void check_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.n)
        fail(errc::invalid_rotation, "rotation must list every vertex");
    for (int v = 0; v < g.n; ++v) {
        std::multiset<int> have(rot.order[v].begin(), rot.order[v].end());
        std::multiset<int> want;
        for (auto [w, e] : g.adj[v]) {
            (void)w;
            want.insert(e);
        }
        if (have != want) fail(errc::invalid_rotation, "rotation at vertex " + std::to_string(v));
    }
}

std::vector<int> check_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) fail(errc::not_a_cycle, "cycle needs >= 3 vertices");
    std::set<int> seen;
    for (int v : cycle) {
        if (v < 0 || v >= g.n) fail(errc::not_a_cycle, "cycle vertex out of range");
        if (!seen.insert(v).second) fail(errc::not_a_cycle, "repeated cycle vertex");
    }
    std::vector<int> edge_ids;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int e = g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (e < 0) fail(errc::not_a_cycle, "consecutive cycle vertices not adjacent");
        edge_ids.push_back(e);
    }
    return edge_ids;
}

}  // namespace

std::vector<CComponent> c_components(const Graph& g, const std::vector<int>& cycle) {
    if (g.directed) fail(errc::directed_unsupported, "planarity works on undirected graphs");
    std::vector<int> cycle_edges = check_cycle(g, cycle);
    std::vector<char> on_cycle(g.n, 0), is_cycle_edge(g.m(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    for (int e : cycle_edges) is_cycle_edge[e] = 1;

    std::vector<CComponent> comps;

    // chords: both endpoints on the cycle
    for (int e = 0; e < g.m(); ++e) {
        if (is_cycle_edge[e]) continue;
        auto [u, v] = g.edges[e];
        if (on_cycle[u] && on_cycle[v]) comps.push_back({{e}, {std::min(u, v), std::max(u, v)}});
    }

    // connected pieces of G minus the cycle, plus their attachment edges
    std::vector<int> group(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (on_cycle[s] || group[s] >= 0 || g.degree(s) == 0) continue;
        int id = static_cast<int>(comps.size());
        std::vector<int> stack{s};
        group[s] = id;
        std::set<int> edges, att;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj[v]) {
                edges.insert(e);
                if (on_cycle[w])
                    att.insert(w);
                else if (group[w] < 0) {
                    group[w] = id;
                    stack.push_back(w);
                }
            }
        }
        comps.push_back({{edges.begin(), edges.end()}, {att.begin(), att.end()}});
    }
    return comps;
}

namespace {

/// True when the two attachment sets interleave around the cycle.
bool skew(const std::vector<int>& pos_a, const std::vector<int>& pos_b, int cycle_len) {
    // three or more shared positions always conflict
    {
        std::vector<int> common;
        std::set_intersection(pos_a.begin(), pos_a.end(), pos_b.begin(), pos_b.end(),
                              std::back_inserter(common));
        if (common.size() >= 3) return true;
    }
    // look for x1 < x2 < y1 < y2 in cyclic order with x from a, y from... i.e.
    // a chord (x1,y1) of a separating b's points strictly on both sides
    for (size_t i = 0; i < pos_a.size(); ++i)
        for (size_t j = i + 1; j < pos_a.size(); ++j) {
            int x = pos_a[i], y = pos_a[j];
            bool inside = false, outside = false;
            for (int p : pos_b) {
                if (p == x || p == y) continue;
                bool in = x < p && p < y;
                (in ? inside : outside) = true;
            }
            (void)cycle_len;
            if (inside && outside) return true;
        }
    return false;
}

std::vector<int> attachment_positions(const CComponent& comp, const std::vector<int>& pos_on_cycle) {
    std::vector<int> p;
    for (int v : comp.attachments) p.push_back(pos_on_cycle[v]);
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace

Graph interlacement_graph(const Graph& g, const std::vector<int>& cycle) {
    std::vector<CComponent> comps = c_components(g, cycle);
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> att_pos;
    for (const CComponent& c : comps) att_pos.push_back(attachment_positions(c, pos));

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j)
            if (skew(att_pos[i], att_pos[j], static_cast<int>(cycle.size())))
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return build_graph(static_cast<int>(comps.size()), std::move(edges));
}

namespace {

/// Is the C-component just a path between two attachments?
bool component_is_path(const Graph& g, const CComponent& comp, const std::vector<char>& on_cycle) {
    if (comp.attachments.size() != 2) return false;
    std::map<int, int> deg;
    for (int e : comp.edges) {
        deg[g.edges[e].first]++;
        deg[g.edges[e].second]++;
    }
    int interior = 0;
    for (auto [v, d] : deg) {
        if (on_cycle[v]) {
            if (d != 1) return false;
        } else {
            if (d != 2) return false;
            ++interior;
        }
    }
    return static_cast<int>(comp.edges.size()) == interior + 1;
}

/// Shortest path from a to b inside the component (interior stays off-cycle).
std::vector<int> path_through_component(const Graph& g, const CComponent& comp,
                                        const std::vector<char>& on_cycle, int a, int b) {
    std::set<int> allowed_edges(comp.edges.begin(), comp.edges.end());
    std::vector<int> pred(g.n, -1);
    std::deque<int> queue{a};
    pred[a] = a;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == b) break;
        if (on_cycle[v] && v != a) continue;  // other cycle vertices are walls
        for (auto [w, e] : g.adj[v])
            if (allowed_edges.count(e) && pred[w] < 0) {
                pred[w] = v;
                queue.push_back(w);
            }
    }
    std::vector<int> path;
    if (pred[b] < 0) return path;
    for (int v = b; v != a; v = pred[v]) path.push_back(v);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

bool ap_planar(const Graph& g, std::vector<int> cycle, int depth);

/// Graph restricted to the cycle plus one component, same vertex ids.
Graph cycle_plus_component(const Graph& g, const std::vector<int>& cycle, const CComponent& comp) {
    std::set<int> keep(comp.edges.begin(), comp.edges.end());
    for (size_t i = 0; i < cycle.size(); ++i)
        keep.insert(g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::vector<std::pair<int, int>> edges;
    for (int e : keep) edges.push_back(g.edges[e]);
    return build_graph(g.n, std::move(edges));
}

std::vector<int> reroute_cycle(const Graph& g, const std::vector<int>& cycle,
                               const CComponent& comp, const std::vector<char>& on_cycle) {
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    std::vector<int> att = comp.attachments;
    std::sort(att.begin(), att.end(), [&](int x, int y) { return pos[x] < pos[y]; });
    // att[0] and att[1] are consecutive along the cycle: the forward arc
    // between them holds no other attachment
    int a = att[0], b = att[1];
    std::vector<int> through = path_through_component(g, comp, on_cycle, a, b);
    std::vector<int> next_cycle = through;  // a ... b
    for (size_t k = pos[b] + 1; (static_cast<int>(k) % cycle.size()) != static_cast<size_t>(pos[a]);
         ++k)
        next_cycle.push_back(cycle[k % cycle.size()]);
    return next_cycle;
}

bool ap_planar(const Graph& g, std::vector<int> cycle, int depth) {
    if (depth > 4 * g.m() + 16) fail(errc::too_large, "planarity recursion guard tripped");
    std::vector<CComponent> comps = c_components(g, cycle);
    if (comps.empty()) return true;

    std::vector<char> on_cycle(g.n, 0);
    for (int v : cycle) on_cycle[v] = 1;

    if (comps.size() == 1 && component_is_path(g, comps[0], on_cycle)) return true;

    Graph inter = interlacement_graph(g, cycle);
    if (!bipartite_partition(inter).bipartite) return false;

    if (comps.size() == 1) {
        // same graph, cycle rerouted through the lone component
        return ap_planar(g, reroute_cycle(g, cycle, comps[0], on_cycle), depth + 1);
    }
    for (const CComponent& comp : comps) {
        if (component_is_path(g, comp, on_cycle)) continue;
        Graph sub = cycle_plus_component(g, cycle, comp);
        if (!ap_planar(sub, cycle, depth + 1)) return false;
    }
    return true;
}

/// Fundamental cycle of the lowest-id non-tree edge.
std::vector<int> initial_cycle(const Graph& g) {
    int root = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 0) { root = v; break; }
    Traversal t = traverse(g, root, Order::dfs);
    std::vector<char> tree_edge(g.m(), 0);
    for (int v = 0; v < g.n; ++v)
        if (t.parent[v] >= 0) tree_edge[g.edge_id(t.parent[v], v)] = 1;
    int chord = -1;
    for (int e = 0; e < g.m(); ++e)
        if (!tree_edge[e] && t.number[g.edges[e].first] > 0) { chord = e; break; }
    if (chord < 0) return {};  // forest: no cycle at all
    auto [u, v] = g.edges[chord];
    std::vector<int> up_u{u}, up_v{v};
    std::vector<int> depth(g.n, 0);
    for (int w : t.order)
        if (t.parent[w] >= 0) depth[w] = depth[t.parent[w]] + 1;
    int x = u, y = v;
    while (depth[x] > depth[y]) { x = t.parent[x]; up_u.push_back(x); }
    while (depth[y] > depth[x]) { y = t.parent[y]; up_v.push_back(y); }
    while (x != y) {
        x = t.parent[x]; up_u.push_back(x);
        y = t.parent[y]; up_v.push_back(y);
    }
    up_u.pop_back();  // drop duplicate lca from one side
    std::reverse(up_v.begin(), up_v.end());
    up_u.insert(up_u.end(), up_v.begin(), up_v.end());
    return up_u;  // u .. lca .. v, closed by the chord
}

std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> num(g.n, 0), low(g.n, 0);
    std::vector<int> edge_stack;
    int counter = 0;
    std::function<void(int, int)> dfs = [&](int v, int pe) {
        num[v] = low[v] = ++counter;
        for (auto [w, e] : g.adj[v]) {
            if (e == pe) continue;
            if (num[w] == 0) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<int> block;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (num[w] < num[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (num[v] == 0 && g.degree(v) > 0) dfs(v, -1);
    return blocks;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "planarity works on undirected graphs");
    for (const std::vector<int>& block : biconnected_blocks(g)) {
        if (block.size() <= 2) continue;  // an edge or two edges: always planar
        std::vector<std::pair<int, int>> edges;
        for (int e : block) edges.push_back(g.edges[e]);
        Graph h = build_graph(g.n, std::move(edges));
        int vertices = 0;
        for (int v = 0; v < g.n; ++v)
            if (h.degree(v) > 0) ++vertices;
        if (vertices >= 3 && h.m() > 3 * vertices - 6) return false;
        std::vector<int> cycle = initial_cycle(h);
        if (cycle.empty()) continue;
        if (!ap_planar(h, std::move(cycle), 0)) return false;
    }
    return true;
}

FaceSet faces_from_rotation(const Graph& g, const RotationSystem& rot) {
    if (!is_connected(g)) fail(errc::bad_params, "face tracing needs a connected graph");
    check_rotation(g, rot);
    std::vector<std::map<int, int>> index(g.n);  // edge id -> slot in rotation
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < static_cast<int>(rot.order[v].size()); ++i) index[v][rot.order[v][i]] = i;

    auto next_dart = [&](int dart) {
        int h = dart_head(g, dart);
        int slot = index[h][dart >> 1];
        int e2 = rot.order[h][(slot + 1) % rot.order[h].size()];
        return 2 * e2 + (g.edges[e2].first == h ? 0 : 1);
    };

    FaceSet fs;
    std::vector<char> seen(2 * g.m(), 0);
    for (int d0 = 0; d0 < 2 * g.m(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = next_dart(d);
        } while (d != d0);
        fs.faces.push_back(std::move(face));
    }
    for (size_t i = 0; i < fs.faces.size(); ++i)
        if (fs.faces[i].size() > fs.faces[fs.outer_face].size()) fs.outer_face = static_cast<int>(i);
    return fs;
}

DualGraph dual_graph(const Graph& g, const RotationSystem& rot) {
    FaceSet fs = faces_from_rotation(g, rot);
    std::vector<int> face_of(2 * g.m(), -1);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
        for (int d : fs.faces[f]) face_of[d] = f;
    DualGraph dual;
    dual.n = static_cast<int>(fs.faces.size());
    for (int e = 0; e < g.m(); ++e) dual.edges.push_back({face_of[2 * e], face_of[2 * e + 1]});
    return dual;
}

std::vector<int> dual_degree_sequence(const DualGraph& d) {
    std::vector<int> deg(d.n, 0);
    for (auto [u, v] : d.edges) {
        deg[u]++;
        deg[v]++;
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

namespace {

std::vector<int> shortest_path_avoiding(const Graph& g, int from, int to,
                                        const std::set<int>& banned_edges) {
    std::vector<int> pred(g.n, -1);
    std::deque<int> queue{from};
    pred[from] = from;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (auto [w, e] : g.adj[v])
            if (!banned_edges.count(e) && pred[w] < 0) {
                pred[w] = v;
                queue.push_back(w);
            }
    }
    std::vector<int> path;
    if (pred[to] < 0) return path;
    for (int v = to; v != from; v = pred[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

DualGraph dual_graph_from_cycles(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "dual construction needs an undirected graph");
    if (!is_connected(g)) fail(errc::bad_params, "dual construction needs a connected graph");
    if (!is_planar(g)) fail(errc::non_planar, "dual construction needs a planar graph");

    LowReport low = tarjan_low(g);
    std::vector<char> is_bridge(g.m(), 0);
    for (int e : low.bridges) is_bridge[e] = 1;

    // slot array a: two face labels per edge; 0 is reserved for the outer face
    std::vector<int> a1(g.m(), -1), a2(g.m(), -1);
    int next_label = 1;

    auto cycle_edges = [&](const std::vector<int>& path, int closing) {
        std::vector<int> es;
        for (size_t i = 0; i + 1 < path.size(); ++i) es.push_back(g.edge_id(path[i], path[i + 1]));
        es.push_back(closing);
        return es;
    };
    auto common_label = [&](const std::vector<int>& es) {
        std::set<int> acc;
        bool first = true;
        for (int e : es) {
            std::set<int> labels;
            if (a1[e] >= 0) labels.insert(a1[e]);
            if (a2[e] >= 0) labels.insert(a2[e]);
            if (first) {
                acc = labels;
                first = false;
            } else {
                std::set<int> keep;
                for (int l : acc)
                    if (labels.count(l)) keep.insert(l);
                acc = keep;
            }
            if (acc.empty()) return false;
        }
        return !acc.empty();
    };
    auto assign = [&](const std::vector<int>& es) {
        int label = next_label++;
        for (int e : es) {
            if (a1[e] < 0)
                a1[e] = label;
            else if (a2[e] < 0)
                a2[e] = label;
            else
                fail(errc::ambiguous_representation, "edge bounded by three cycles");
        }
    };

    for (int e = 0; e < g.m(); ++e) {
        if (is_bridge[e]) continue;
        auto [u, v] = g.edges[e];
        std::vector<int> p1 = shortest_path_avoiding(g, u, v, {e});
        std::vector<int> es = cycle_edges(p1, e);
        if (!common_label(es)) {
            assign(es);
            continue;
        }
        // duplicate of a known cycle: retry with one adjacent path edge removed
        bool placed = false;
        for (int drop : {g.edge_id(p1[0], p1[1]), g.edge_id(p1[p1.size() - 2], p1.back())}) {
            std::vector<int> p2 = shortest_path_avoiding(g, u, v, {e, drop});
            if (p2.empty()) continue;
            std::vector<int> es2 = cycle_edges(p2, e);
            if (!common_label(es2)) {
                assign(es2);
                placed = true;
                break;
            }
        }
        (void)placed;  // both faces already known: slots fill from neighbors
    }

    // every remaining open slot on a cycle edge faces the outer region
    for (int e = 0; e < g.m(); ++e)
        if (!is_bridge[e] && a2[e] < 0) {
            if (a1[e] < 0) fail(errc::ambiguous_representation, "cycle edge missed by every cycle");
            a2[e] = 0;
        }

    // bridges are loops inside whichever face their neighborhood lives in
    for (int e = 0; e < g.m(); ++e) {
        if (!is_bridge[e]) continue;
        // BFS outward until some edge with a settled second slot appears
        std::vector<char> seen(g.n, 0);
        std::deque<int> queue{g.edges[e].first, g.edges[e].second};
        seen[g.edges[e].first] = seen[g.edges[e].second] = 1;
        int label = 0;
        bool found = false;
        while (!queue.empty() && !found) {
            int x = queue.front();
            queue.pop_front();
            for (auto [w, f] : g.adj[x]) {
                if (!is_bridge[f] && a2[f] >= 0) {
                    label = a2[f];
                    found = true;
                    break;
                }
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        a1[e] = a2[e] = label;
    }

    // Euler self-check: label count must match V - E + F = 2
    std::set<int> labels;
    for (int e = 0; e < g.m(); ++e) {
        labels.insert(a1[e]);
        labels.insert(a2[e]);
    }
    if (g.m() == 0) labels.insert(0);
    int expected_faces = g.m() - g.n + 2;
    if (static_cast<int>(labels.size()) != expected_faces)
        fail(errc::ambiguous_representation, "face count disagrees with the Euler formula");

    std::map<int, int> relabel;
    for (int l : labels) relabel.emplace(l, static_cast<int>(relabel.size()));
    DualGraph dual;
    dual.n = static_cast<int>(labels.size());
    for (int e = 0; e < g.m(); ++e) dual.edges.push_back({relabel[a1[e]], relabel[a2[e]]});
    return dual;
}

std::vector<int> lee_path(const Graph& g, const RotationSystem& rot, int start_face, int end_face) {
    FaceSet fs = faces_from_rotation(g, rot);
    int faces = static_cast<int>(fs.faces.size());
    if (start_face < 0 || start_face >= faces || end_face < 0 || end_face >= faces)
        fail(errc::index_out_of_range, "face index out of range");
    if (start_face == fs.outer_face || end_face == fs.outer_face)
        fail(errc::outer_face_endpoint, "route endpoints must be inner faces");

    DualGraph dual = dual_graph(g, rot);
    std::set<std::pair<int, int>> inner_edges;
    std::vector<std::vector<int>> adj(faces);
    for (auto [u, v] : dual.edges) {
        if (u == fs.outer_face || v == fs.outer_face) continue;
        if (u == v) fail(errc::not_simple_star, "dual minus outer face has a loop");
        auto key = std::minmax(u, v);
        if (!inner_edges.insert({key.first, key.second}).second)
            fail(errc::not_simple_star, "dual minus outer face has parallel edges");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> pred(faces, -1);
    std::deque<int> queue{start_face};
    pred[start_face] = start_face;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        if (f == end_face) break;
        for (int t : adj[f])
            if (pred[t] < 0) {
                pred[t] = f;
                queue.push_back(t);
            }
    }
    if (pred[end_face] < 0) fail(errc::disconnected, "no inner-face route exists");
    std::vector<int> path;
    for (int f = end_face; f != start_face; f = pred[f]) path.push_back(f);
    path.push_back(start_face);
    std::reverse(path.begin(), path.end());
    return path;
}

RotationSystem rotation_from_coords(const Graph& g, const std::vector<std::array<double, 3>>& pos) {
    if (static_cast<int>(pos.size()) != g.n) fail(errc::bad_dimension, "one coordinate per vertex");
    RotationSystem rot;
    rot.order.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        auto p = pos[v];
        double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        std::array<double, 3> nrm{p[0] / norm, p[1] / norm, p[2] / norm};
        // tangent basis (t1, t2) with t1 x t2 = nrm
        std::array<double, 3> ref = std::abs(nrm[0]) < 0.9 ? std::array<double, 3>{1, 0, 0}
                                                           : std::array<double, 3>{0, 1, 0};
        std::array<double, 3> t1{nrm[1] * ref[2] - nrm[2] * ref[1],
                                 nrm[2] * ref[0] - nrm[0] * ref[2],
                                 nrm[0] * ref[1] - nrm[1] * ref[0]};
        double l1 = std::sqrt(t1[0] * t1[0] + t1[1] * t1[1] + t1[2] * t1[2]);
        for (double& c : t1) c /= l1;
        std::array<double, 3> t2{nrm[1] * t1[2] - nrm[2] * t1[1], nrm[2] * t1[0] - nrm[0] * t1[2],
                                 nrm[0] * t1[1] - nrm[1] * t1[0]};
        std::vector<std::pair<double, int>> slots;
        for (auto [w, e] : g.adj[v]) {
            std::array<double, 3> d{pos[w][0] - p[0], pos[w][1] - p[1], pos[w][2] - p[2]};
            double x = d[0] * t1[0] + d[1] * t1[1] + d[2] * t1[2];
            double y = d[0] * t2[0] + d[1] * t2[1] + d[2] * t2[2];
            slots.push_back({std::atan2(y, x), e});
        }
        std::sort(slots.begin(), slots.end());
        for (auto [angle, e] : slots) {
            (void)angle;
            rot.order[v].push_back(e);
        }
    }
    return rot;
}

RotationSystem rotation_from_plane(const Graph& g, const std::vector<std::array<double, 2>>& pos) {
    if (static_cast<int>(pos.size()) != g.n) fail(errc::bad_dimension, "one coordinate per vertex");
    RotationSystem rot;
    rot.order.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<double, int>> slots;
        for (auto [w, e] : g.adj[v])
            slots.push_back({std::atan2(pos[w][1] - pos[v][1], pos[w][0] - pos[v][0]), e});
        std::sort(slots.begin(), slots.end());
        for (auto [angle, e] : slots) {
            (void)angle;
            rot.order[v].push_back(e);
        }
    }
    return rot;
}

PlanarEmbedding platonic_embedding(const std::string& name) {
    SolidGraph solid = platonic_solid(name);
    RotationSystem rot = rotation_from_coords(solid.g, solid.coords);
    return {std::move(solid.g), std::move(rot)};
}

PlanarEmbedding grid_embedding(int k, int l) {
    Graph g = grid_graph(k, l);
    std::vector<std::array<double, 2>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) pos.push_back({static_cast<double>(j), static_cast<double>(-i)});
    RotationSystem rot = rotation_from_plane(g, pos);
    return {std::move(g), std::move(rot)};
}

}  // namespace graphlib
