#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "dismantle/instances.hpp"
#include "dismantle/io.hpp"
#include "dismantle/suite.hpp"

namespace dismantle::cli {

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level()
{
    const char* env = std::getenv("DISMANTLE_LOG");
    if (!env)
        return LogLevel::quiet;
    const std::string v = env;
    if (v == "debug" || v == "2")
        return LogLevel::debug;
    if (v == "info" || v == "1")
        return LogLevel::info;
    return LogLevel::quiet;
}

void log(LogLevel level, const std::string& message)
{
    static const LogLevel current = log_level();
    if (level <= current)
        std::cerr << "[dismantle] " << message << '\n';
}

struct Outcome {
    bool holds = true;
    Json result = Json::object();
    std::optional<std::string> dot; // replaces the JSON report when set
};

// State shared by all subcommands of one invocation.
struct Session {
    std::vector<std::string> args;
    std::vector<std::string> inputs; // raw input file contents, digest order
    std::optional<std::uint64_t> seed;
    bool human = false;
    bool dot = false;

    std::string read(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::invalid_input, "cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        inputs.push_back(buf.str());
        log(LogLevel::debug, "read " + path + " (" + std::to_string(inputs.back().size()) + " bytes)");
        return inputs.back();
    }

    Json json(const std::string& path) { return parse_json(read(path)); }
    Graph graph(const std::string& path) { return graph_from_json(json(path)); }
};

// "0,1,2" or "[0,1,2]".
VertexSet parse_vertices(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[')
        return vertex_set_from_json(parse_json(text));
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::invalid_input, "'" + item + "' is not a vertex id");
        }
    }
    if (out.empty())
        throw Error(ErrorKind::invalid_input, "empty vertex list");
    return VertexSet(std::move(out));
}

// Vertices left once dominated vertices are removed for as long as possible.
VertexSet stuck_core(const Graph& g)
{
    VertexSet alive = g.vertex_set();
    for (bool progress = true; progress && alive.size() > 1;) {
        progress = false;
        const Graph sub = induced_subgraph(g, alive);
        for (Vertex v : sub.vertices())
            if (is_dominated(sub, v)) {
                alive.erase(v);
                progress = true;
                break;
            }
    }
    return alive;
}

Json failed_dismantling(const Graph& g)
{
    return Json{{"dismantlable", false},
                {"core", to_json(stuck_core(g))},
                {"reason", "no vertex of the core is dominated in the subgraph it induces"}};
}

struct GroupChoice {
    std::string path;
    bool full_aut = false;

    PermutationGroup load(Session& s, const Graph& g, bool required) const
    {
        if (full_aut && !path.empty())
            throw Error(ErrorKind::invalid_input, "--group and --full-aut are exclusive");
        if (full_aut)
            return automorphism_group(g);
        if (!path.empty())
            return group_from_json(s.json(path), g);
        if (required)
            throw Error(ErrorKind::invalid_input, "one of --group or --full-aut is required");
        return PermutationGroup::trivial(g.vertices());
    }
};

void add_group_options(CLI::App* cmd, GroupChoice& choice)
{
    cmd->add_option("--group", choice.path, "Group JSON {\"generators\":[[...]]}");
    cmd->add_flag("--full-aut", choice.full_aut, "Use the full automorphism group");
}

ExposureMode parse_mode(const std::string& text)
{
    if (text == "exact")
        return ExactMode{};
    if (text.rfind("sample:", 0) == 0) {
        const auto colon = text.find(':', 7);
        if (colon != std::string::npos) {
            try {
                return SampledMode{std::stoull(text.substr(7, colon - 7)), std::stoull(text.substr(colon + 1))};
            } catch (const std::logic_error&) {
            }
        }
    }
    throw Error(ErrorKind::invalid_input, "mode must be exact or sample:N:SEED, got '" + text + "'");
}

std::size_t exit_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::unknown_vertex:
    case ErrorKind::disconnected:
    case ErrorKind::cap_exceeded: return exit_usage;
    default: return exit_fails;
    }
}

Json graph_summary(const Graph& g)
{
    return Json{{"vertices", g.order()}, {"edges", g.edge_count()}};
}

Outcome graph_outcome(const Session& s, const Graph& g, Json extra = Json::object())
{
    Outcome out;
    if (s.dot) {
        out.dot = to_dot(g);
        return out;
    }
    out.result = std::move(extra);
    out.result["graph"] = to_json(g);
    return out;
}

std::uint64_t need_seed(const Session& s, const std::string& what)
{
    if (!s.seed)
        throw Error(ErrorKind::invalid_input, what + " is randomized; --seed is required");
    return *s.seed;
}

} // namespace

std::string sha256_hex(const std::vector<std::string>& chunks)
{
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (const auto& c : chunks)
        EVP_DigestUpdate(ctx, c.data(), c.size());
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

int run(int argc, char** argv)
{
    Session s;
    for (int i = 1; i < argc; ++i)
        s.args.emplace_back(argv[i]);

    CLI::App app{"Dismantlable graphs, invariant cliques, projections and Rips complexes", "dismantle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--human", s.human, "Pretty-print the JSON report");

    std::map<const CLI::App*, std::function<Outcome()>> actions;
    std::string graph_path;
    auto graph_opt = [&](CLI::App* cmd) { cmd->add_option("--graph", graph_path, "Graph JSON")->required(); };
    auto seed_opt = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--seed", s.seed, "Random seed");
        if (required)
            o->required();
    };
    auto dot_opt = [&](CLI::App* cmd) { cmd->add_flag("--dot", s.dot, "Emit Graphviz DOT instead of JSON"); };

    // check / order ------------------------------------------------------
    bool per_component = false;
    auto dismantle_report = [&]() {
        const Graph g = s.graph(graph_path);
        const std::uint64_t seed = s.seed.value_or(0);
        Outcome out;
        if (per_component) {
            Json comps = Json::array();
            const auto traces = dismantling_orders_by_component(g, seed);
            const auto parts = connected_components(g);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                Json c = traces[i] ? Json{{"dismantlable", true}, {"trace", to_json(*traces[i])}}
                                   : failed_dismantling(induced_subgraph(g, parts[i]));
                c["vertices"] = to_json(parts[i]);
                out.holds = out.holds && traces[i].has_value();
                comps.push_back(std::move(c));
            }
            out.result = Json{{"dismantlable", out.holds}, {"components", std::move(comps)}};
            return out;
        }
        if (!g.empty() && !is_connected(g))
            throw Error(ErrorKind::disconnected, "graph is disconnected; pass --per-component to test each part");
        const auto trace = dismantling_order(g, seed);
        out.holds = trace.has_value();
        out.result = trace ? Json{{"dismantlable", true}, {"trace", to_json(*trace)}, {"verified", verify_trace(g, *trace)}}
                           : failed_dismantling(g);
        return out;
    };
    {
        auto* cmd = app.add_subcommand("check", "Decide dismantlability");
        graph_opt(cmd);
        seed_opt(cmd, false);
        cmd->add_flag("--per-component", per_component, "Treat each connected component separately");
        actions[cmd] = dismantle_report;
    }
    {
        auto* cmd = app.add_subcommand("order", "Dismantling order with witnesses");
        graph_opt(cmd);
        seed_opt(cmd, true);
        cmd->add_flag("--per-component", per_component, "Treat each connected component separately");
        actions[cmd] = dismantle_report;
    }
    {
        auto* cmd = app.add_subcommand("copwin", "Solve the one-cop pursuit game");
        graph_opt(cmd);
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            Outcome out;
            out.holds = copwin_oracle(g);
            out.result = Json{{"copwin", out.holds}};
            return out;
        };
    }
    std::size_t gen_n = 0;
    std::size_t gen_extra = 0;
    {
        auto* cmd = app.add_subcommand("gen-dismantlable", "Random dismantlable graph");
        cmd->add_option("--n", gen_n, "Vertex count")->required();
        cmd->add_option("--extra", gen_extra, "Extra edges to try to add");
        seed_opt(cmd, true);
        dot_opt(cmd);
        actions[cmd] = [&] {
            const Graph g = random_dismantlable(gen_n, gen_extra, need_seed(s, "gen-dismantlable"));
            return graph_outcome(s, g, graph_summary(g));
        };
    }

    // invariant cliques and fixed complexes --------------------------------
    GroupChoice group;
    bool debug = false;
    {
        auto* cmd = app.add_subcommand("invariant-clique", "Clique invariant under a group of automorphisms");
        graph_opt(cmd);
        add_group_options(cmd, group);
        cmd->add_flag("--debug", debug, "Re-check dismantlability at every level");
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const PermutationGroup h = group.load(s, g, false);
            const auto res = invariant_clique(g, h, {debug});
            Outcome out;
            out.holds = verify_invariant_clique(g, h, res.clique);
            out.result = to_json(res);
            out.result["verified"] = out.holds;
            out.result["group_order"] = h.order();
            return out;
        };
    }
    {
        auto* cmd = app.add_subcommand("fixed-complex", "Fixed subcomplex of the flag complex and its homology");
        graph_opt(cmd);
        add_group_options(cmd, group);
        seed_opt(cmd, false);
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const PermutationGroup h = group.load(s, g, true);
            const FixedSubcomplex fixed = fixed_subcomplex(g, h);
            const ReducedBetti betti = gf2_homology(fixed.complex);
            Outcome out;
            out.holds = !fixed.complex.empty() && betti.trivial();
            Json labels = Json::array();
            for (const auto& l : fixed.labels)
                labels.push_back(l);
            out.result = Json{{"empty", fixed.complex.empty()},
                              {"betti", to_json(betti)},
                              {"collapsed", nullptr},
                              {"invariant_cliques", std::move(labels)},
                              {"complex", to_json(fixed.complex)}};
            if (s.seed && !fixed.complex.empty())
                out.result["collapsed"] = greedy_collapse(fixed.complex, *s.seed);
            return out;
        };
    }
    {
        auto* cmd = app.add_subcommand("thm15", "Stage-by-stage reduction certificate for the fixed subcomplex");
        graph_opt(cmd);
        add_group_options(cmd, group);
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const PermutationGroup h = group.load(s, g, true);
            Outcome out;
            out.result = to_json(theorem15_reduction(g, h));
            return out;
        };
    }

    // projections ---------------------------------------------------------
    std::string proj_path;
    std::string mode_text = "exact";
    bool partial = false;
    {
        auto* cmd = app.add_subcommand("verify-projection", "Check both projection axioms");
        graph_opt(cmd);
        cmd->add_option("--proj", proj_path, "Projection JSON")->required();
        cmd->add_option("--mode", mode_text, "exact or sample:N:SEED");
        cmd->add_flag("--partial", partial, "Allow rows to be missing");
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const DismantlingProjection p = projection_from_json(s.json(proj_path));
            const ExposureMode mode = parse_mode(mode_text);
            validate_projection(g, p, !partial);
            const ExposureReport exposed = verify_axiom_exposed(g, p, mode);
            const auto cycle = verify_axiom_acyclic(g, p);
            Outcome out;
            out.holds = exposed.passed() && !cycle;
            Json acyclic{{"passed", !cycle}};
            if (cycle)
                acyclic["cycle"] = *cycle;
            out.result = Json{{"axiom_exposed", to_json(exposed)}, {"axiom_acyclic", std::move(acyclic)}};
            return out;
        };
    }
    {
        auto* cmd = app.add_subcommand("order-from-proj", "Dismantling order built from a projection");
        graph_opt(cmd);
        cmd->add_option("--proj", proj_path, "Projection JSON")->required();
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const DismantlingProjection p = projection_from_json(s.json(proj_path));
            validate_projection(g, p);
            const auto trace = order_from_projection(g, p);
            Outcome out;
            out.holds = verify_trace(g, trace);
            out.result = Json{{"trace", to_json(trace)}, {"verified", out.holds}};
            return out;
        };
    }
    std::string family_path;
    std::string r_text;
    {
        auto* cmd = app.add_subcommand("prop210", "Invariant clique through a convex set and a projection family");
        graph_opt(cmd);
        cmd->add_option("--group", group.path, "Group JSON")->required();
        cmd->add_option("--proj-family", family_path, "Projection family JSON")->required();
        cmd->add_option("--r", r_text, "Vertex set, e.g. 0,1,2")->required();
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const PermutationGroup h = group.load(s, g, true);
            const ProjectionFamily fam = family_from_json(s.json(family_path));
            const auto res = invariant_clique_via_projections(g, h, fam, parse_vertices(r_text));
            Outcome out;
            out.holds = verify_invariant_clique(g, h, res.clique);
            out.result = to_json(res);
            out.result["verified"] = out.holds;
            return out;
        };
    }

    // hyperbolic graphs -----------------------------------------------------
    std::optional<std::size_t> cap;
    {
        auto* cmd = app.add_subcommand("hyperbolicity", "Thin-triangle constant delta");
        graph_opt(cmd);
        cmd->add_option("--cap", cap, "List geodesics explicitly, at most N per pair");
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            Outcome out;
            out.result = to_json(cap ? hyperbolicity_delta_by_enumeration(g, *cap, true) : hyperbolicity_delta(g));
            return out;
        };
    }
    std::size_t d_param = 0;
    std::string c_text;
    std::optional<std::size_t> radius;
    std::optional<std::size_t> delta_override;
    {
        auto* cmd = app.add_subcommand("rips", "Dismantling order of a ball in the Rips graph P_D");
        graph_opt(cmd);
        cmd->add_option("--D", d_param, "Scale D")->required();
        cmd->add_option("--c", c_text, "Centre set (default: quasi-centre of all vertices)");
        cmd->add_option("--r", radius, "Ball radius (default: the whole graph)");
        cmd->add_option("--delta", delta_override, "Use this delta, at least the computed one");
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const std::size_t exact = hyperbolicity_delta(g).delta;
            const std::size_t delta = delta_override.value_or(exact);
            const VertexSet c = c_text.empty() ? quasi_centre(g, g.vertex_set()).centre : parse_vertices(c_text);
            std::size_t r = 0;
            if (radius) {
                r = *radius;
            } else {
                const DistanceMatrix dist(g);
                for (Vertex v : g.vertices())
                    r = std::max(r, static_cast<std::size_t>(distance_to_set(g, dist, v, c)));
            }
            const auto res = rips_ball_order(g, delta, d_param, c, r, {delta_override.has_value()});
            Outcome out;
            out.result = Json{{"delta", delta}, {"computed_delta", exact}, {"D", d_param}, {"centre", to_json(c)},
                              {"r", r}};
            out.result.update(to_json(res));
            return out;
        };
    }
    std::string o_text;
    {
        auto* cmd = app.add_subcommand("quasi-centre", "Quasi-centre of a vertex set and its diameter bound");
        graph_opt(cmd);
        cmd->add_option("--o", o_text, "Vertex set, e.g. 0,4")->required();
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const QuasiCentre qc = quasi_centre(g, parse_vertices(o_text));
            const std::size_t delta = hyperbolicity_delta(g).delta;
            const auto diam = static_cast<std::size_t>(set_diameter(g, DistanceMatrix(g), qc.centre));
            Outcome out;
            out.holds = diam <= 4 * delta + 1;
            out.result = to_json(qc);
            out.result["diameter"] = diam;
            out.result["delta"] = delta;
            out.result["bound"] = 4 * delta + 1;
            return out;
        };
    }
    std::string s_text;
    {
        auto* cmd = app.add_subcommand("lemma101", "Invariant dismantlable ball of P_D containing a set");
        graph_opt(cmd);
        cmd->add_option("--D", d_param, "Scale D")->required();
        cmd->add_option("--s", s_text, "Vertex set, e.g. 3,7")->required();
        add_group_options(cmd, group);
        actions[cmd] = [&] {
            const Graph g = s.graph(graph_path);
            const PermutationGroup h = group.load(s, g, false);
            const auto sub = invariant_subgraph_for(g, h, parse_vertices(s_text), d_param);
            Outcome out;
            out.holds = h.is_invariant(sub.vertices);
            out.result = Json{{"delta", sub.delta},
                              {"D", d_param},
                              {"orbit", to_json(sub.orbit)},
                              {"quasi_centre", to_json(sub.centre)},
                              {"r", sub.r},
                              {"vertices", to_json(sub.vertices)},
                              {"invariant", out.holds},
                              {"order", to_json(sub.order)}};
            return out;
        };
    }

    // instances -------------------------------------------------------------
    std::string kind;
    std::vector<std::size_t> params;
    double density = 0.2;
    std::string out_path;
    {
        auto* cmd = app.add_subcommand("gen", "Generate a graph");
        cmd->add_option("--kind", kind,
                        "path|cycle|complete|star|wheel|petersen|grid|tree|connected|dismantlable|"
                        "symmetric-dismantlable|free-ball|polygon")
            ->required();
        cmd->add_option("--params", params, "Size parameters")->delimiter(',');
        cmd->add_option("--p", density, "Edge probability for connected");
        cmd->add_option("--out", out_path, "Write the graph JSON to a file");
        seed_opt(cmd, false);
        dot_opt(cmd);
        actions[cmd] = [&] {
            auto arg = [&](std::size_t i) {
                if (params.size() <= i)
                    throw Error(ErrorKind::invalid_input, kind + " needs " + std::to_string(i + 1) + " parameter(s)");
                return params[i];
            };
            Graph g;
            if (kind == "tree")
                g = random_tree(arg(0), need_seed(s, kind));
            else if (kind == "connected")
                g = random_connected_graph(arg(0), density, need_seed(s, kind));
            else if (kind == "dismantlable")
                g = random_dismantlable(arg(0), params.size() > 1 ? params[1] : 0, need_seed(s, kind));
            else if (kind == "symmetric-dismantlable")
                g = random_symmetric_dismantlable(arg(0), need_seed(s, kind));
            else if (kind == "free-ball")
                g = free_group_ball(arg(0), arg(1));
            else if (kind == "polygon")
                g = polygon_diagonal_graph(arg(0));
            else
                g = standard_graph(kind, params);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f)
                    throw Error(ErrorKind::invalid_input, "cannot write " + out_path);
                f << (s.dot ? to_dot(g) : to_json(g).dump(2) + "\n");
                Outcome out;
                out.result = graph_summary(g);
                out.result["written"] = out_path;
                return out;
            }
            return graph_outcome(s, g, graph_summary(g));
        };
    }
    std::size_t polygon_n = 0;
    std::string sigma_text;
    {
        auto* cmd = app.add_subcommand("polygon", "Diagonal graph of a convex polygon");
        cmd->add_option("--n", polygon_n, "Number of corners")->required();
        cmd->add_option("--sigma", sigma_text, "Diagonal a,b: also build its surgery projection");
        dot_opt(cmd);
        actions[cmd] = [&] {
            const Graph g = polygon_diagonal_graph(polygon_n);
            if (s.dot)
                return graph_outcome(s, g);
            Json diagonals = Json::array();
            for (const auto& d : polygon_diagonals(polygon_n))
                diagonals.push_back({d.i, d.j});
            Outcome out;
            out.result = Json{{"n", polygon_n},
                              {"diagonals", std::move(diagonals)},
                              {"graph", to_json(g)},
                              {"dismantlable", is_dismantlable(g)},
                              {"copwin", copwin_oracle(g)}};
            out.holds = out.result["dismantlable"].get<bool>();
            if (!sigma_text.empty()) {
                const VertexSet ends = parse_vertices(sigma_text);
                if (ends.size() != 2)
                    throw Error(ErrorKind::invalid_input, "--sigma needs two corners");
                const auto pp = polygon_projection(polygon_n, make_diagonal(polygon_n, ends.front(), ends.back()));
                out.result["projection"] = to_json(pp.projection);
                out.result["undefined_rows"] = pp.undefined_rows;
                const ExposureMode mode = g.order() <= exact_exposure_vertex_cap ? ExposureMode{ExactMode{}}
                                                                                 : ExposureMode{SampledMode{10000, 0}};
                out.result["axiom_exposed"] = to_json(verify_axiom_exposed(g, pp.projection, mode));
            }
            return out;
        };
    }
    std::size_t rank = 0;
    std::size_t ball_radius = 0;
    {
        auto* cmd = app.add_subcommand("free-ball", "Ball in the Cayley graph of a free group");
        cmd->add_option("--rank", rank, "Rank")->required();
        cmd->add_option("--radius", ball_radius, "Radius")->required();
        dot_opt(cmd);
        actions[cmd] = [&] {
            const Graph g = free_group_ball(rank, ball_radius);
            return graph_outcome(s, g, graph_summary(g));
        };
    }

    // acceptance battery ------------------------------------------------------
    std::vector<std::string> only;
    std::optional<std::string> fault;
    {
        auto* cmd = app.add_subcommand("suite", "Run the acceptance battery");
        seed_opt(cmd, true);
        cmd->add_option("--only", only, "Criteria to run, e.g. P1,P4")->delimiter(',');
        cmd->add_option("--inject-fault", fault, "Corrupt a fixture on purpose (p4)");
        actions[cmd] = [&, cmd] {
            SuiteOptions opt;
            opt.seed = need_seed(s, "suite");
            opt.only = only;
            if (cmd->count("--only") && only.empty())
                throw Error(ErrorKind::invalid_input, "empty criterion selection");
            opt.inject_fault = fault;
            opt.on_result = [](const CriterionResult& r) {
                std::ostringstream line;
                line << r.id << (r.passed ? " pass " : " FAIL ") << r.cases << " cases in " << r.seconds << "s";
                log(LogLevel::info, line.str());
            };
            const SuiteReport report = run_suite(opt);
            Outcome out;
            out.holds = report.passed();
            out.result = report.to_json();
            return out;
        };
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Json report{{"command", name}, {"args", s.args}};
    int code = exit_holds;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome out = actions.at(chosen)();
        log(LogLevel::info, name + " finished in " +
                                std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) +
                                "s");
        if (out.dot) {
            std::cout << *out.dot;
            return exit_holds;
        }
        code = out.holds ? exit_holds : exit_fails;
        report["inputs_sha256"] = sha256_hex(s.inputs);
        if (s.seed)
            report["seed"] = *s.seed;
        report["holds"] = out.holds;
        report["result"] = std::move(out.result);
    } catch (const Error& e) {
        code = static_cast<int>(exit_for(e.kind()));
        report["inputs_sha256"] = sha256_hex(s.inputs);
        if (s.seed)
            report["seed"] = *s.seed;
        report["holds"] = false;
        report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
        log(LogLevel::info, std::string(to_string(e.kind())) + ": " + e.what());
    }
    std::cout << (s.human ? report.dump(2) : report.dump()) << '\n';
    return code;
}

} // namespace dismantle::cli
