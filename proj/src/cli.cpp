#include "vth/cli.hpp"

#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "vth/io.hpp"

namespace vth {

namespace {

struct CommonOpts {
    std::string alpha = "1/2";
    std::string c = "1/18";
    int exact_limit = 18;
    long long budget_ms = 1000;
    std::string format = "text";
    long long seed = 1;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--alpha", o.alpha, "density parameter, rational like 1/2");
    cmd->add_option("--c", o.c, "bipartite closeness parameter, rational below 1/17");
    cmd->add_option("--exact-limit", o.exact_limit, "complete-engine size cap")
        ->check(CLI::Range(4, 26));
    cmd->add_option("--budget-ms", o.budget_ms, "per-stage search budget in milliseconds");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("--seed", o.seed, "seed for random instance generation");
    cmd->add_option("--out", o.out_path, "output path (or prefix for gen)");
}

PipelineConfig make_config(const CommonOpts& o) {
    PipelineConfig cfg;
    cfg.alpha = parse_rat(o.alpha);
    cfg.c = parse_rat(o.c);
    if (cfg.alpha <= Rat(0) || cfg.alpha > Rat(1))
        throw std::invalid_argument("alpha must be in (0, 1]");
    if (cfg.c <= Rat(0) || cfg.c >= Rat(1, 17))
        throw std::invalid_argument("c must be in (0, 1/17)");
    cfg.path_limits.dp_limit = o.exact_limit;
    cfg.path_limits.backtrack_limit = std::max(o.exact_limit, 24);
    // The budget is deterministic: milliseconds scale a node count, wall
    // clocks never enter any verdict.
    cfg.path_limits.node_budget = o.budget_ms * 10000;
    return cfg;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void emit(const CommonOpts& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty())
        out << text;
    else
        write_file(o.out_path, text);
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

int do_gen(const std::string& kind, const std::vector<std::string>& args, const CommonOpts& o,
           std::ostream& out, std::ostream& err) {
    Graph graph;
    std::optional<AutomorphismWitness> witness;
    try {
        if (kind == "circulant") {
            if (args.size() != 2) throw std::invalid_argument("usage: gen circulant <n> <offsets>");
            auto inst = circulant(std::stoi(args[0]), parse_csv_ints(args[1]));
            graph = std::move(inst.graph);
            witness = std::move(inst.witness);
        } else if (kind == "double_clique") {
            if (args.size() != 1) throw std::invalid_argument("usage: gen double_clique <n>");
            auto inst = double_clique(std::stoi(args[0]));
            graph = std::move(inst.graph);
            witness = std::move(inst.witness);
        } else if (kind == "fixture") {
            if (args.empty() || args.size() > 2)
                throw std::invalid_argument("usage: gen fixture <name> [param]");
            auto fx = fixture(args[0], args.size() == 2 ? std::stoi(args[1]) : 0);
            graph = std::move(fx.graph);
            witness = std::move(fx.witness);
        } else if (kind == "cayley") {
            if (args.size() != 1) throw std::invalid_argument("usage: gen cayley <spec.json>");
            auto spec = cayley_spec_from_json(ojson::parse(read_file(args[0])));
            auto inst = cayley_graph(spec);
            graph = std::move(inst.graph);
            witness = std::move(inst.witness);
        } else if (kind == "random") {
            if (args.size() != 2) throw std::invalid_argument("usage: gen random <n> <m>");
            int n = std::stoi(args[0]), m = std::stoi(args[1]);
            std::mt19937_64 rng((std::uint64_t)o.seed);
            std::set<std::pair<int, int>> edges;
            long long max_edges = (long long)n * (n - 1) / 2;
            if (m > max_edges) throw std::invalid_argument("too many edges requested");
            while ((int)edges.size() < m) {
                int u = (int)(rng() % n), v = (int)(rng() % n);
                if (u == v) continue;
                edges.emplace(std::min(u, v), std::max(u, v));
            }
            graph = Graph(n, {edges.begin(), edges.end()});
        } else {
            err << "unknown generator '" << kind << "'\n";
            return 2;
        }
    } catch (const std::exception& e) {
        err << "gen: " << e.what() << "\n";
        return 2;
    }
    std::string prefix = o.out_path.empty() ? std::string("graph") : o.out_path;
    write_file(prefix + ".graph", format_graph(graph));
    if (witness) write_file(prefix + ".witness.json", witness_to_json(*witness).dump(2) + "\n");
    out << "wrote " << prefix << ".graph (n=" << graph.n << " m=" << graph.m() << ")";
    if (witness) out << " and " << prefix << ".witness.json";
    out << "\n";
    return 0;
}

int do_analyze(const std::string& what, const std::string& graph_path, int level,
               const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = load_graph(graph_path);
    } catch (const std::exception& e) {
        err << "analyze: " << e.what() << "\n";
        return 2;
    }
    try {
        if (what == "islands") {
            auto part = islands(g, level);
            emit(o, out, island_partition_to_json(part).dump(2) + "\n");
            return 0;
        }
        if (what == "fvc") {
            auto cover = fvc(g);
            auto matching = nu_star(g);
            ojson j;
            j["fvc"] = cover.value.str();
            j["nu_star"] = matching.value.str();
            j["cover_values"] = ojson::array();
            for (const auto& v : cover.witness.values) j["cover_values"].push_back(v.str());
            j["matching"] = matching_to_json(matching.witness);
            emit(o, out, j.dump(2) + "\n");
            return 0;
        }
        if (what == "iron") {
            auto rep = is_l_iron(g, level);
            ojson j;
            j["level"] = level;
            j["iron"] = rep.robust;
            if (rep.cut) j["cut_witness"] = cut_witness_to_json(*rep.cut);
            emit(o, out, j.dump(2) + "\n");
            return rep.robust ? 0 : 1;
        }
        if (what == "bipartite") {
            auto dist = bipartiteness_distance(g);
            ojson j;
            j["distance"] = dist.distance;
            j["partition"] = bipartition_to_json(dist.partition);
            emit(o, out, j.dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        err << "analyze: " << e.what() << "\n";
        return 2;
    }
    err << "unknown analysis '" << what << "'\n";
    return 2;
}

int do_hamilton(const std::string& graph_path, const std::string& witness_path,
                const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Graph g;
    AutomorphismWitness w;
    try {
        g = load_graph(graph_path);
        if (!witness_path.empty())
            w = witness_from_json(ojson::parse(read_file(witness_path)));
        else if (g.n > 0)
            w.generators.push_back(Permutation::identity(g.n));
    } catch (const std::exception& e) {
        err << "hamilton: " << e.what() << "\n";
        return 2;
    }
    PipelineConfig cfg;
    try {
        cfg = make_config(o);
    } catch (const std::exception& e) {
        err << "hamilton: " << e.what() << "\n";
        return 2;
    }
    auto rep = find_hamilton_cycle(g, w, cfg);
    if (o.format == "json") {
        emit(o, out, pipeline_report_to_json(rep).dump(2) + "\n");
    } else if (o.format == "dot") {
        std::vector<std::pair<int, int>> cycle_edges;
        for (size_t i = 0; rep.success && i < rep.cycle.size(); ++i)
            cycle_edges.emplace_back(rep.cycle[i], rep.cycle[(i + 1) % rep.cycle.size()]);
        std::vector<int> colors(g.n, 0);
        std::vector<std::pair<int, int>> highlights;
        if (rep.success) {
            const auto& win = rep.candidates[rep.winning_candidate];
            for (size_t b = 0; b < win.blocks.size(); ++b)
                for (int v : win.blocks[b]) colors[v] = (int)b;
            // Highlight connectors when a gluing produced the cycle, else
            // the cycle itself.
            highlights = win.connectors.empty() ? cycle_edges : win.connectors;
        }
        emit(o, out, to_dot(g, rep.success ? &colors : nullptr,
                            rep.success ? &highlights : nullptr));
    } else {
        std::ostringstream text;
        text << "n=" << rep.n << " m=" << rep.m << " candidates=" << rep.candidates.size()
             << "\n";
        for (const auto& a : rep.advisories) text << "advisory: " << a << "\n";
        if (rep.success) {
            text << "hamilton cycle found (candidate " << rep.winning_candidate << ")\n";
        } else {
            text << "failure at stage '" << rep.failure_stage << "': " << rep.failure_reason
                 << "\n";
            // Text output is a summary; the json format lists every record.
            size_t shown = std::min<size_t>(rep.candidates.size(), 20);
            for (size_t i = 0; i < shown; ++i)
                text << "  candidate[" << rep.candidates[i].stage
                     << "]: " << rep.candidates[i].outcome << "\n";
            if (shown < rep.candidates.size())
                text << "  ... and " << rep.candidates.size() - shown
                     << " more rejected candidates\n";
        }
        emit(o, out, text.str());
    }
    if (rep.success) {
        out << "cycle:";
        for (int v : rep.cycle) out << " " << v;
        out << "\n";
        return 0;
    }
    return 1;
}

int do_verify(const std::string& graph_path, const std::string& artifact_path, std::ostream& out,
              std::ostream& err) {
    Graph g;
    ojson artifact;
    try {
        g = load_graph(graph_path);
        artifact = ojson::parse(read_file(artifact_path));
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << "\n";
        return 2;
    }
    std::string type = artifact.value("type", "");
    try {
        if (type == "cycle") {
            bool ok = verify_hamilton_cycle(g, artifact.at("cycle").get<std::vector<int>>());
            out << (ok ? "valid cycle\n" : "invalid cycle\n");
            return ok ? 0 : 1;
        }
        if (type == "path_system") {
            EndpointRequest req;
            req.exceptional = VertexSet(g.n);
            for (const auto& pr : artifact.at("pairs"))
                req.pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
            if (artifact.contains("exceptional"))
                for (int v : artifact["exceptional"].get<std::vector<int>>())
                    req.exceptional.add(v);
            PathSystem s;
            s.paths = artifact.at("paths").get<std::vector<std::vector<int>>>();
            s.endpoints = req.pairs;
            auto res = verify_path_system(g, req, s, artifact.value("spanning", true));
            out << (res.ok ? "valid path system\n" : "invalid path system\n");
            for (const auto& r : res.reasons) out << "  " << r << "\n";
            return res.ok ? 0 : 1;
        }
        if (type == "matching") {
            std::vector<char> used(g.n, 0);
            bool ok = true;
            for (const auto& e : artifact.at("edges")) {
                int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v) || used[u] ||
                    used[v]) {
                    ok = false;
                    break;
                }
                used[u] = used[v] = 1;
            }
            out << (ok ? "valid matching\n" : "invalid matching\n");
            return ok ? 0 : 1;
        }
        if (type == "bipartition") {
            auto av = artifact.at("A").get<std::vector<int>>();
            auto bv = artifact.at("B").get<std::vector<int>>();
            VertexSet a = VertexSet::from_vector(g.n, av);
            VertexSet b = VertexSet::from_vector(g.n, bv);
            bool ok = !a.intersects(b) && (a | b).count() == g.n &&
                      (int)av.size() + (int)bv.size() == g.n;
            if (ok && artifact.contains("internal"))
                ok = g.edges_within(a) + g.edges_within(b) == artifact["internal"].get<int>();
            if (ok && artifact.contains("cut"))
                ok = g.edges_between(a, b) == artifact["cut"].get<int>();
            out << (ok ? "valid bipartition\n" : "invalid bipartition\n");
            return ok ? 0 : 1;
        }
        if (type == "cut_witness") {
            VertexSet removed = VertexSet::from_vector(g.n, artifact.value("removed", std::vector<int>{}));
            VertexSet x = VertexSet::from_vector(g.n, artifact.at("X").get<std::vector<int>>());
            VertexSet y = VertexSet::from_vector(g.n, artifact.at("Y").get<std::vector<int>>());
            bool ok = !x.empty() && !y.empty() && !x.intersects(y) && !x.intersects(removed) &&
                      !y.intersects(removed) && (x | y | removed).count() == g.n;
            if (ok) {
                int crossing = max_cross_degree(g, x, y);
                ok = crossing == artifact.at("crossing_max_degree").get<int>();
            }
            out << (ok ? "valid cut witness\n" : "invalid cut witness\n");
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << "\n";
        return 2;
    }
    err << "unknown artifact type '" << type << "'\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"desk-scale Hamilton cycle toolkit for dense vertex-transitive graphs"};
    app.require_subcommand(1);

    CommonOpts gen_opts, an_opts, ham_opts, ver_opts;
    std::string gen_kind;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance (graph + witness)");
    gen->add_option("kind", gen_kind, "circulant|double_clique|fixture|cayley|random")
        ->required();
    gen->add_option("args", gen_args, "generator arguments");
    add_common(gen, gen_opts);

    std::string an_what, an_graph;
    int an_level = 1;
    auto* an = app.add_subcommand("analyze", "run a single analysis");
    an->add_option("what", an_what, "islands|fvc|iron|bipartite")->required();
    an->add_option("graph", an_graph, "graph file")->required();
    an->add_option("--l", an_level, "connectivity level");
    add_common(an, an_opts);

    std::string ham_graph, ham_witness;
    auto* ham = app.add_subcommand("hamilton", "run the full pipeline");
    ham->add_option("graph", ham_graph, "graph file")->required();
    ham->add_option("--witness", ham_witness, "witness json file");
    add_common(ham, ham_opts);

    std::string ver_graph, ver_artifact;
    auto* ver = app.add_subcommand("verify", "verify an artifact against a graph");
    ver->add_option("graph", ver_graph, "graph file")->required();
    ver->add_option("artifact", ver_artifact, "artifact json file")->required();
    add_common(ver, ver_opts);

    std::vector<const char*> argv{"vth"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }
    if (gen->parsed()) return do_gen(gen_kind, gen_args, gen_opts, out, err);
    if (an->parsed()) return do_analyze(an_what, an_graph, an_level, an_opts, out, err);
    if (ham->parsed()) return do_hamilton(ham_graph, ham_witness, ham_opts, out, err);
    if (ver->parsed()) return do_verify(ver_graph, ver_artifact, out, err);
    return 2;
}

}  // namespace vth
