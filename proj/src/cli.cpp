#include "graphlib/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphlib/connectivity.hpp"
#include "graphlib/euler_hamilton.hpp"
#include "graphlib/flow.hpp"
#include "graphlib/metrics.hpp"
#include "graphlib/shortest_path.hpp"
#include "graphlib/spanning.hpp"
#include "graphlib/spectral.hpp"
#include "graphlib/traversal.hpp"

namespace graphlib {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- parsing

GraphDocument parse_edgelist(const std::string& text) {
    GraphDocument doc;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, double>> weights;  // (edge index, weight)
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue;  // blank line
        if (first[0] == '#') {
            std::string word = first.size() > 1 ? first.substr(1) : "";
            if (word.empty()) row >> word;
            if (word == "directed") directed = true;
            else if (word == "undirected") directed = false;
            continue;  // other # lines are comments
        }
        std::istringstream fields(line);
        int u, v;
        if (!(fields >> u >> v))
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'u v [weight]'");
        double w;
        if (fields >> w) weights.push_back({static_cast<int>(edges.size()), w});
        std::string rest;
        if (fields >> rest)
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": trailing data");
        edges.push_back({u, v});
    }
    int n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    std::vector<double> w;
    if (!weights.empty()) {
        w.assign(edges.size(), 1.0);
        for (auto [e, x] : weights) w[e] = x;
    }
    doc.graph = build_graph(n, std::move(edges), directed, std::move(w));
    return doc;
}

GraphDocument parse_json_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
    try {
        GraphDocument doc;
        int n = j.at("n").get<int>();
        bool directed = j.value("directed", false);
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.value("edges", json::array()))
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        std::vector<double> weights;
        if (j.contains("weights")) weights = j["weights"].get<std::vector<double>>();
        doc.graph = build_graph(n, std::move(edges), directed, std::move(weights));
        if (j.contains("rotation")) {
            RotationSystem rot;
            rot.order = j["rotation"].get<std::vector<std::vector<int>>>();
            doc.rotation = std::move(rot);
        }
        if (j.contains("flow")) {
            const json& f = j["flow"];
            FlowSpec spec;
            spec.source = f.at("source").get<int>();
            spec.terminal = f.at("terminal").get<int>();
            spec.capacities = f.at("capacities").get<std::vector<double>>();
            if (f.contains("costs")) spec.costs = f["costs"].get<std::vector<double>>();
            doc.flow = std::move(spec);
        }
        if (j.contains("labels")) doc.labels = j["labels"].get<std::vector<std::string>>();
        return doc;
    } catch (const json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

json document_to_json(const GraphDocument& doc) {
    json j;
    j["n"] = doc.graph.n;
    j["directed"] = doc.graph.directed;
    j["edges"] = json::array();
    for (auto [u, v] : doc.graph.edges) j["edges"].push_back({u, v});
    if (doc.graph.weighted()) j["weights"] = doc.graph.weights;
    if (doc.rotation) j["rotation"] = doc.rotation->order;
    if (doc.flow) {
        json f;
        f["source"] = doc.flow->source;
        f["terminal"] = doc.flow->terminal;
        f["capacities"] = doc.flow->capacities;
        if (!doc.flow->costs.empty()) f["costs"] = doc.flow->costs;
        j["flow"] = f;
    }
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j;
}

}  // namespace

GraphDocument parse_graph_file(const std::string& text, FileFormat format) {
    return format == FileFormat::json ? parse_json_document(text) : parse_edgelist(text);
}

GraphDocument parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return parse_graph_file(text, c == '{' ? FileFormat::json : FileFormat::edgelist);
    }
    fail(errc::parse_error, "empty input");
}

std::string emit_graph(const GraphDocument& doc, FileFormat format) {
    if (format == FileFormat::json) return document_to_json(doc).dump(2) + "\n";
    std::ostringstream out;
    out << (doc.graph.directed ? "# directed\n" : "# undirected\n");
    for (int e = 0; e < doc.graph.m(); ++e) {
        out << doc.graph.edges[e].first << ' ' << doc.graph.edges[e].second;
        if (doc.graph.weighted()) out << ' ' << doc.graph.weights[e];
        out << '\n';
    }
    return out.str();
}

std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << (g.directed ? "digraph g {\n" : "graph g {\n");
    const char* link = g.directed ? " -> " : " -- ";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (int e = 0; e < g.m(); ++e) {
        out << "  " << g.edges[e].first << link << g.edges[e].second;
        if (g.weighted()) out << " [label=\"" << g.weights[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

// ---------------------------------------------------------------- reports

void render_text(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    } else {
        out << prefix << " = " << j.dump() << "\n";
    }
}

void print_report(const json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        render_text(j, "", out);
    else
        out << j.dump(2) << "\n";
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json a = json::array();
    for (auto [u, v] : pairs) a.push_back({u, v});
    return a;
}

json dist_json(const std::vector<double>& dist) {
    json a = json::array();
    for (double d : dist) {
        if (d == kInf)
            a.push_back(nullptr);
        else
            a.push_back(d);
    }
    return a;
}

json cycle_report_json(const NegativeCycleReport& rep) {
    return json{{"cycle", rep.cycle}, {"weight", rep.weight}};
}

// --------------------------------------------------------------- commands

struct Options {
    std::string format = "json";
    std::string emit = "native";
    std::string input = "-";
    std::uint64_t seed = 12345;
    int threads = 1;
};

std::string slurp(const Options& opt, std::istream& in) {
    if (opt.input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(opt.input);
    if (!file) fail(errc::parse_error, "cannot open " + opt.input);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

GraphDocument read_document(const Options& opt, std::istream& in) {
    return parse_graph_auto(slurp(opt, in));
}

json analyze_all(const Graph& g, double epsilon) {
    static const std::vector<std::pair<std::string, GlobalMetric>> kGlobals = {
        {"diameter", GlobalMetric::diameter},
        {"density", GlobalMetric::density},
        {"global_efficiency", GlobalMetric::global_efficiency},
        {"avg_shortest_path", GlobalMetric::avg_shortest_path},
        {"avg_clustering", GlobalMetric::avg_clustering},
    };
    static const std::vector<VertexMetric> kVertex = {
        VertexMetric::degree,          VertexMetric::mnc,
        VertexMetric::dmnc,            VertexMetric::local_clustering,
        VertexMetric::betweenness,     VertexMetric::bottleneck,
        VertexMetric::closeness,       VertexMetric::eccentricity,
        VertexMetric::radiality,       VertexMetric::stress,
        VertexMetric::local_efficiency_contribution,
    };
    json rep;
    for (const auto& [name, kind] : kGlobals) {
        try {
            rep["global"][name] = global_metric(g, kind);
        } catch (const GraphError& e) {
            rep["global"][name] = errc_name(e.code());
        }
    }
    static const std::vector<std::string> kVertexNames = {
        "degree",     "mnc",         "dmnc",      "local_clustering",
        "betweenness", "bottleneck", "closeness", "eccentricity",
        "radiality",  "stress",      "local_efficiency_contribution",
    };
    for (size_t i = 0; i < kVertex.size(); ++i) {
        try {
            MetricReport r = vertex_centrality(g, kVertex[i], epsilon);
            rep["vertex"][r.name] = r.values;
        } catch (const GraphError& e) {
            rep["vertex"][kVertexNames[i]] = errc_name(e.code());
        }
    }
    return rep;
}

json analyze_one(const Graph& g, const std::string& metric, double epsilon, std::uint64_t seed,
                 int samples) {
    static const std::map<std::string, GlobalMetric> kGlobals = {
        {"diameter", GlobalMetric::diameter},
        {"density", GlobalMetric::density},
        {"global_efficiency", GlobalMetric::global_efficiency},
        {"avg_shortest_path", GlobalMetric::avg_shortest_path},
        {"avg_clustering", GlobalMetric::avg_clustering},
    };
    static const std::map<std::string, VertexMetric> kVertex = {
        {"degree", VertexMetric::degree},
        {"mnc", VertexMetric::mnc},
        {"dmnc", VertexMetric::dmnc},
        {"local_clustering", VertexMetric::local_clustering},
        {"betweenness", VertexMetric::betweenness},
        {"bottleneck", VertexMetric::bottleneck},
        {"closeness", VertexMetric::closeness},
        {"eccentricity", VertexMetric::eccentricity},
        {"radiality", VertexMetric::radiality},
        {"stress", VertexMetric::stress},
        {"local_efficiency_contribution", VertexMetric::local_efficiency_contribution},
    };
    json rep;
    rep["metric"] = metric;
    if (auto it = kGlobals.find(metric); it != kGlobals.end())
        rep["value"] = global_metric(g, it->second);
    else if (auto vt = kVertex.find(metric); vt != kVertex.end())
        rep["values"] = vertex_centrality(g, vt->second, epsilon).values;
    else if (metric == "small_world")
        rep["value"] = small_world(g, seed, samples);
    else if (metric == "inequalities") {
        InequalityReport r = centrality_inequalities_check(g);
        rep["local_efficiency_bound"] = r.local_efficiency_bound;
        rep["path_vs_density"] = r.path_vs_density;
        rep["efficiency_sandwich"] = r.efficiency_sandwich;
        rep["slack_local_efficiency"] = r.slack_local_efficiency;
        rep["slack_path_vs_density"] = r.slack_path_vs_density;
        rep["slack_efficiency_sandwich"] = r.slack_efficiency_sandwich;
        rep["neighborhood_equality_case"] = r.neighborhood_equality_case;
    } else
        fail(errc::bad_params, "unknown metric " + metric);
    return rep;
}

FlowNetwork network_from(const GraphDocument& doc) {
    if (!doc.flow) fail(errc::bad_params, "input carries no flow metadata");
    if (!doc.graph.directed) fail(errc::bad_params, "flow networks must be directed");
    return build_network(doc.graph.n, doc.graph.edges, doc.flow->capacities, doc.flow->source,
                         doc.flow->terminal, doc.flow->costs);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"graph algorithms toolbox"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand name

    Options opt;
    if (const char* env = std::getenv("GRAPH_CLI_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--emit", opt.emit, "output flavor for graph-emitting commands")
        ->check(CLI::IsMember({"native", "dot"}));
    app.add_option("--input", opt.input, "input file, - for stdin")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized computations");
    app.add_option("--threads", opt.threads, "worker threads (reserved)")->check(CLI::PositiveNumber);

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "emit a named graph family");
    std::string family;
    long long gen_n = -1, gen_m = -1, gen_k = -1, gen_l = -1;
    generate_cmd->add_option("--family", family, "family or platonic solid name")->required();
    generate_cmd->add_option("--n", gen_n);
    generate_cmd->add_option("--m", gen_m);
    generate_cmd->add_option("--k", gen_k);
    generate_cmd->add_option("--l", gen_l);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "metric reports");
    std::string metric;
    double epsilon = 1.7;
    int samples = 20;
    analyze_cmd->add_option("--metric", metric, "single metric (default: full report)");
    analyze_cmd->add_option("--epsilon", epsilon, "dmnc exponent")->check(CLI::Range(1.0, 2.0));
    analyze_cmd->add_option("--samples", samples, "small-world baseline samples");

    // mst
    auto* mst_cmd = app.add_subcommand("mst", "minimum spanning tree");
    std::string mst_algorithm = "prim";
    mst_cmd->add_option("--algorithm", mst_algorithm)->check(CLI::IsMember({"prim", "kruskal"}));

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "shortest paths");
    std::string paths_algorithm = "dijkstra";
    int source = 0;
    paths_cmd->add_option("--algorithm", paths_algorithm)
        ->check(CLI::IsMember({"dijkstra", "bellman_ford", "floyd_warshall", "johnson"}));
    paths_cmd->add_option("--source", source);

    // connectivity
    auto* connectivity_cmd = app.add_subcommand("connectivity", "kappa, lambda, bridges, cuts");

    // euler
    auto* euler_cmd = app.add_subcommand("euler", "Eulerian classification and trails");
    std::string euler_strategy = "two_stacks";
    euler_cmd->add_option("--strategy", euler_strategy)
        ->check(CLI::IsMember({"cycle_stack", "fleury", "two_stacks"}));

    // hamilton
    auto* hamilton_cmd = app.add_subcommand("hamilton", "Hamiltonicity criteria");
    std::string criterion = "all";
    bool exact = false;
    int max_n = 12;
    hamilton_cmd->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"ore", "dirac", "bondy_chvatal", "all"}));
    hamilton_cmd->add_flag("--exact", exact, "also run the backtracking search");
    hamilton_cmd->add_option("--max-n", max_n, "size cap for --exact");

    // planar
    auto* planar_cmd = app.add_subcommand("planar", "planarity test");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "dual graph");
    bool from_cycles = false;
    dual_cmd->add_flag("--from-cycles", from_cycles, "ignore any rotation system");

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "maximum flow");
    std::string flow_strategy = "dinic";
    flow_cmd->add_option("--strategy", flow_strategy)
        ->check(CLI::IsMember({"ford_fulkerson", "ff", "edmonds_karp", "ek", "dinic"}));

    // mincost
    auto* mincost_cmd = app.add_subcommand("mincost", "minimum-cost maximum flow");
    std::string mincost_strategy = "cycle_canceling_ff";
    mincost_cmd->add_option("--strategy", mincost_strategy)
        ->check(CLI::IsMember({"cycle_canceling_ff", "dinic_then_cancel"}));

    // spectral
    auto* spectral_cmd = app.add_subcommand("spectral", "normalized Laplacian spectrum");
    double tol = 1e-12;
    spectral_cmd->add_option("--tol", tol, "off-diagonal tolerance");

    // cheeger
    auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger constant and inequality");

    std::vector<std::string> argv = args;
    argv.insert(argv.begin(), "graph-cli");
    std::vector<const char*> raw;
    for (const std::string& s : argv) raw.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (generate_cmd->parsed()) {
            std::vector<long long> params;
            for (long long p : {gen_n, gen_m, gen_k, gen_l})
                if (p >= 0) params.push_back(p);
            GraphDocument doc;
            bool platonic = std::find(platonic_names().begin(), platonic_names().end(), family) !=
                            platonic_names().end();
            if (platonic) {
                PlanarEmbedding emb = platonic_embedding(family);
                doc.graph = std::move(emb.g);
                doc.rotation = std::move(emb.rot);
            } else if (family == "grid" && params.size() == 2) {
                PlanarEmbedding emb = grid_embedding(static_cast<int>(params[0]),
                                                     static_cast<int>(params[1]));
                doc.graph = std::move(emb.g);
                doc.rotation = std::move(emb.rot);
            } else {
                doc.graph = generate(family, params);
            }
            if (opt.emit == "dot")
                out << emit_dot(doc.graph);
            else
                out << emit_graph(doc, opt.format == "text" ? FileFormat::edgelist
                                                            : FileFormat::json);
            return 0;
        }

        if (analyze_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            json rep = metric.empty() ? analyze_all(doc.graph, epsilon)
                                      : analyze_one(doc.graph, metric, epsilon, opt.seed, samples);
            print_report(rep, opt.format, out);
            return 0;
        }

        if (mst_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            TreeResult tree =
                mst(doc.graph, mst_algorithm == "prim" ? MstStrategy::prim : MstStrategy::kruskal);
            json rep;
            rep["algorithm"] = mst_algorithm;
            rep["edge_ids"] = tree.edges;
            json edge_list = json::array();
            for (int e : tree.edges)
                edge_list.push_back({doc.graph.edges[e].first, doc.graph.edges[e].second});
            rep["edges"] = edge_list;
            rep["total_weight"] = tree.total_weight;
            print_report(rep, opt.format, out);
            return 0;
        }

        if (paths_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            json rep;
            rep["algorithm"] = paths_algorithm;
            if (paths_algorithm == "dijkstra") {
                PathTree t = dijkstra(doc.graph, source);
                rep["source"] = source;
                rep["dist"] = dist_json(t.dist);
                rep["pred"] = t.pred;
            } else if (paths_algorithm == "bellman_ford") {
                PathTreeResult r = bellman_ford(doc.graph, source);
                rep["source"] = source;
                if (r.ok()) {
                    rep["dist"] = dist_json(r.tree->dist);
                    rep["pred"] = r.tree->pred;
                } else {
                    rep["negative_cycle"] = cycle_report_json(*r.negative_cycle);
                }
            } else {
                DistanceMatrixResult r = paths_algorithm == "floyd_warshall"
                                             ? floyd_warshall(doc.graph)
                                             : johnson(doc.graph);
                if (r.ok()) {
                    json rows = json::array();
                    for (const auto& row : *r.dist) rows.push_back(dist_json(row));
                    rep["dist"] = rows;
                } else {
                    rep["negative_cycle"] = cycle_report_json(*r.negative_cycle);
                }
            }
            print_report(rep, opt.format, out);
            return 0;
        }

        if (connectivity_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            LowReport low = tarjan_low(doc.graph);
            json rep;
            rep["components"] = connected_components(doc.graph).size();
            rep["kappa"] = vertex_connectivity(doc.graph);
            rep["lambda"] = edge_connectivity(doc.graph);
            int min_degree = doc.graph.n == 0 ? 0 : doc.graph.degree(0);
            for (int v = 0; v < doc.graph.n; ++v)
                min_degree = std::min(min_degree, doc.graph.degree(v));
            rep["min_degree"] = min_degree;
            json bridges = json::array();
            for (int e : low.bridges)
                bridges.push_back({doc.graph.edges[e].first, doc.graph.edges[e].second});
            rep["bridges"] = bridges;
            rep["cut_vertices"] = low.cut_vertices;
            print_report(rep, opt.format, out);
            return 0;
        }

        if (euler_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            EulerClassification c = eulerian_classify(doc.graph);
            json rep;
            rep["kind"] = c.kind == EulerKind::eulerian_cycle ? "cycle"
                          : c.kind == EulerKind::eulerian_path ? "path"
                                                               : "none";
            rep["odd_vertices"] = c.odd_vertices;
            EulerStrategy strategy = euler_strategy == "cycle_stack" ? EulerStrategy::cycle_stack
                                     : euler_strategy == "fleury"    ? EulerStrategy::fleury
                                                                     : EulerStrategy::two_stacks;
            if (c.kind == EulerKind::eulerian_cycle)
                rep["trail"] = pairs_json(eulerian_cycle(doc.graph, strategy));
            else if (c.kind == EulerKind::eulerian_path) {
                rep["endpoints"] = {c.endpoints.first, c.endpoints.second};
                rep["trail"] = pairs_json(eulerian_path(doc.graph));
            }
            print_report(rep, opt.format, out);
            return 0;
        }

        if (hamilton_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            json rep;
            if (criterion == "ore" || criterion == "all")
                rep["ore"] = hamiltonian_sufficient(doc.graph, HamiltonCriterion::ore);
            if (criterion == "dirac" || criterion == "all")
                rep["dirac"] = hamiltonian_sufficient(doc.graph, HamiltonCriterion::dirac);
            if (criterion == "bondy_chvatal" || criterion == "all")
                rep["bondy_chvatal"] =
                    hamiltonian_sufficient(doc.graph, HamiltonCriterion::bondy_chvatal);
            if (exact) {
                auto cycle = hamiltonian_cycle_bruteforce(doc.graph, max_n);
                rep["hamiltonian"] = cycle.has_value();
                if (cycle) rep["cycle"] = *cycle;
            }
            print_report(rep, opt.format, out);
            return 0;
        }

        if (planar_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            json rep;
            rep["planar"] = is_planar(doc.graph);
            if (doc.rotation) {
                FaceSet fs = faces_from_rotation(doc.graph, *doc.rotation);
                rep["faces"] = fs.faces.size();
                rep["outer_face"] = fs.outer_face;
                rep["euler_characteristic"] =
                    doc.graph.n - doc.graph.m() + static_cast<int>(fs.faces.size());
            }
            print_report(rep, opt.format, out);
            return 0;
        }

        if (dual_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            DualGraph dual = (doc.rotation && !from_cycles)
                                 ? dual_graph(doc.graph, *doc.rotation)
                                 : dual_graph_from_cycles(doc.graph);
            if (opt.emit == "dot") {
                // emitted directly: dual graphs may hold loops and multi-edges
                out << "graph dual {\n";
                for (int v = 0; v < dual.n; ++v) out << "  " << v << ";\n";
                for (auto [u, v] : dual.edges) out << "  " << u << " -- " << v << ";\n";
                out << "}\n";
                return 0;
            }
            json rep;
            rep["n"] = dual.n;
            rep["edges"] = pairs_json(dual.edges);
            rep["degree_sequence"] = dual_degree_sequence(dual);
            print_report(rep, opt.format, out);
            return 0;
        }

        if (flow_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            FlowNetwork net = network_from(doc);
            FlowStrategy strategy = (flow_strategy == "ford_fulkerson" || flow_strategy == "ff")
                                        ? FlowStrategy::ford_fulkerson
                                    : (flow_strategy == "edmonds_karp" || flow_strategy == "ek")
                                        ? FlowStrategy::edmonds_karp
                                        : FlowStrategy::dinic;
            MaxFlowResult result = max_flow(net, strategy);
            Cut cut = min_cut(net);
            json rep;
            rep["strategy"] = flow_strategy;
            rep["value"] = result.flow.value;
            rep["augmentations"] = result.augmentations;
            rep["min_cut"] = {{"a", cut.a}, {"b", cut.b}, {"capacity", cut.capacity}};
            print_report(rep, opt.format, out);
            return 0;
        }

        if (mincost_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            FlowNetwork net = network_from(doc);
            MinCostResult result = min_cost_max_flow(
                net, mincost_strategy == "dinic_then_cancel" ? MinCostStrategy::dinic_then_cancel
                                                             : MinCostStrategy::cycle_canceling_ff);
            json rep;
            rep["strategy"] = mincost_strategy;
            rep["value"] = result.flow.value;
            rep["cost"] = result.cost;
            print_report(rep, opt.format, out);
            return 0;
        }

        if (spectral_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            Spectrum spec = symmetric_spectrum(normalized_laplacian(doc.graph), tol);
            double trace = 0;
            for (double l : spec.eigenvalues) trace += l;
            json rep;
            rep["eigenvalues"] = spec.eigenvalues;
            rep["lambda2"] = spec.eigenvalues.size() > 1 ? spec.eigenvalues[1] : 0.0;
            rep["trace"] = trace;
            rep["residual"] = spec.residual;
            print_report(rep, opt.format, out);
            return 0;
        }

        if (cheeger_cmd->parsed()) {
            GraphDocument doc = read_document(opt, in);
            CutReport cut = cheeger_constant(doc.graph);
            CheegerReport bounds = cheeger_inequality_check(doc.graph);
            json rep;
            rep["h"] = cut.h;
            rep["best_subset"] = cut.best_subset;
            rep["boundary"] = cut.boundary;
            rep["volume"] = cut.volume;
            rep["volume_complement"] = cut.volume_complement;
            rep["lambda2"] = bounds.lambda2;
            rep["lower_bound_holds"] = bounds.lower_bound;
            rep["upper_bound_holds"] = bounds.upper_bound;
            rep["slack_lower"] = bounds.slack_lower;
            rep["slack_upper"] = bounds.slack_upper;
            print_report(rep, opt.format, out);
            return 0;
        }
    } catch (const GraphError& e) {
        err << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace graphlib
