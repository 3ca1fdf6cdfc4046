#include "dismantle/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "dismantle/instances.hpp"
#include "dismantle/metric.hpp"

namespace dismantle {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
    // splitmix64 over the three inputs
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(base) ^ a) ^ b);
}

namespace {

// Collects case outcomes; keeps the first failure message.
class Tally {
public:
    void ok() { ++cases_; }

    void fail(std::string why)
    {
        ++cases_;
        ++failures_;
        if (first_.empty())
            first_ = std::move(why);
    }

    template <class F>
    void run(const std::string& label, F&& body)
    {
        try {
            if (body())
                ok();
            else
                fail(label);
        } catch (const Error& e) {
            fail(label + ": " + to_string(e.kind()) + ": " + e.what());
        }
    }

    CriterionResult finish(std::string id, std::string title, std::string summary, Json evidence = Json::object()) const
    {
        CriterionResult r;
        r.id = std::move(id);
        r.title = std::move(title);
        r.cases = cases_;
        r.failures = failures_;
        r.passed = failures_ == 0 && cases_ > 0;
        r.detail = failures_ ? first_ : std::move(summary);
        r.evidence = std::move(evidence);
        return r;
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::string graph_text(const Graph& g)
{
    return to_json(g).dump();
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Dismantlable test graphs with a mix of shapes and symmetry.
Graph mixed_dismantlable(std::mt19937_64& rng, std::size_t max_n)
{
    const std::size_t n = pick(rng, 1, max_n);
    switch (pick(rng, 0, 3)) {
    case 0: return random_dismantlable(n, pick(rng, 0, n), rng());
    case 1: return random_symmetric_dismantlable(n, rng());
    case 2: {
        // cone over a symmetric graph
        const std::size_t k = std::max<std::size_t>(n, 4) - 1;
        const Graph base = pick(rng, 0, 1) ? cycle_graph(k) : star_graph(k - 1);
        std::vector<Edge> edges = base.edges();
        std::vector<Vertex> vs = base.vertices();
        const auto apex = static_cast<Vertex>(k);
        vs.push_back(apex);
        for (Vertex v : base.vertices())
            edges.emplace_back(v, apex);
        return Graph(vs, edges);
    }
    default: return random_dismantlable(n, pick(rng, 0, 3 * n), rng());
    }
}

bool invariant_under_all(const Graph& g, const PermutationGroup& h, const VertexSet& s)
{
    if (!is_clique(g, s))
        return false;
    for (const auto& p : h.elements())
        if (p(s) != s)
            return false;
    return true;
}

// ------------------------------------------------------------------ P1

CriterionResult p1(const SuiteOptions& opt)
{
    Tally tally;
    std::size_t dismantlable = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Edge> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                slots.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        std::vector<Vertex> vs(n);
        for (std::size_t i = 0; i < n; ++i)
            vs[i] = static_cast<Vertex>(i);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (mask >> k & 1)
                    edges.push_back(slots[k]);
            const Graph g(vs, edges);
            if (!is_connected(g))
                continue;
            tally.run("graph " + graph_text(g), [&] {
                const auto trace = dismantling_order(g, derive_seed(opt.seed, 1, mask));
                if (trace && !verify_trace(g, *trace))
                    return false;
                dismantlable += trace.has_value();
                return trace.has_value() == copwin_oracle(g);
            });
        }
    }
    return tally.finish("P1", "dismantling order exists iff cop-win, all connected graphs on <= 6 vertices",
                        "orders and pursuit game agree", Json{{"dismantlable", dismantlable}});
}

// ------------------------------------------------------------------ P2

CriterionResult p2(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 2));
    std::size_t repairs = 0;
    for (std::size_t i = 0; i < 300; ++i) {
        const Graph g = pick(rng, 0, 1) ? random_dismantlable(pick(rng, 1, 12), pick(rng, 0, 20), rng())
                                        : random_symmetric_dismantlable(pick(rng, 1, 12), rng());
        const auto trace = dismantling_order(g, rng());
        tally.run("graph " + graph_text(g), [&] {
            if (!trace)
                return false;
            for (Vertex sigma : g.vertices()) {
                if (!is_dominated(g, sigma))
                    continue;
                VertexSet rest = g.vertex_set();
                rest.erase(sigma);
                if (!verify_trace(induced_subgraph(g, rest), remove_and_reorder(g, *trace, sigma)))
                    return false;
                ++repairs;
            }
            return true;
        });
    }
    return tally.finish("P2", "order repair after removing any dominated vertex, 300 graphs n <= 12",
                        "all repaired orders verified", Json{{"repairs", repairs}});
}

// ------------------------------------------------------------------ P3

CriterionResult p3(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 3));
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const Graph g = mixed_dismantlable(rng, 9);
        tally.run("graph " + graph_text(g), [&] {
            const PermutationGroup aut = automorphism_group(g);
            nontrivial += aut.order() > 1;
            const auto result = invariant_clique(g, aut);
            return invariant_under_all(g, aut, result.clique);
        });
    }
    for (const auto& [name, g] : {std::pair{"C5", cycle_graph(5)}, std::pair{"Petersen", petersen_graph()}}) {
        tally.run(std::string(name) + " accepted", [&, g = g] {
            try {
                invariant_clique(g, automorphism_group(g));
            } catch (const Error& e) {
                return e.kind() == ErrorKind::not_dismantlable;
            }
            return false;
        });
    }
    return tally.finish("P3", "invariant clique under the full automorphism group, 200 graphs n <= 9",
                        "all cliques invariant; C5 and Petersen rejected",
                        Json{{"nontrivial_groups", nontrivial}});
}

// ------------------------------------------------------------------ P4

std::string exposure_failure(const ExposureReport& rep)
{
    return rep.failures.empty() ? "" : " (no exposed vertex in R = " + rep.failures.front().to_string() + ")";
}

bool projection_pipeline(const Graph& power, const DismantlingProjection& proj, std::string& why)
{
    const auto exposed = verify_axiom_exposed(power, proj, ExactMode{});
    if (!exposed.passed()) {
        why = "axiom (i) fails" + exposure_failure(exposed);
        return false;
    }
    if (auto cycle = verify_axiom_acyclic(power, proj)) {
        why = "axiom (ii) fails on a cycle through " + std::to_string(cycle->front());
        return false;
    }
    return verify_trace(power, order_from_projection(power, proj));
}

CriterionResult p4(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 4));
    std::size_t balls = 0;
    struct Case {
        Graph tree;
        std::size_t d;
        DismantlingProjection proj;
    };
    std::vector<Case> cases;
    for (std::size_t i = 0; i < 100; ++i) {
        const Graph tree = random_tree(pick(rng, 2, 14), rng());
        const std::size_t d = pick(rng, 1, 4);
        const Vertex sigma = static_cast<Vertex>(pick(rng, 0, tree.order() - 1));
        cases.push_back({tree, d, tree_power_projection(tree, d, sigma)});
    }
    if (opt.inject_fault == "p4") {
        const Graph tree = path_graph(8);
        DismantlingProjection bad = tree_power_projection(tree, 1, 0);
        bad.table[1] = {VertexPair(7, 7)};
        cases.push_back({tree, 1, bad});
    }
    for (const auto& c : cases) {
        const Graph power = rips_power_graph(c.tree, c.d);
        std::string why;
        tally.run("tree " + graph_text(c.tree) + " D=" + std::to_string(c.d), [&] {
            if (!projection_pipeline(power, c.proj, why))
                throw Error(ErrorKind::counterexample, why);
            const DistanceMatrix dist(c.tree);
            const std::size_t root = c.tree.index_of(c.proj.sigma);
            std::size_t radius = 0;
            for (std::size_t j = 0; j < c.tree.order(); ++j)
                radius = std::max(radius, static_cast<std::size_t>(dist(root, j)));
            for (std::size_t k = 0; k <= radius; ++k) {
                const VertexSet b = ball(c.tree, dist, VertexSet{c.proj.sigma}, k);
                if (!is_pi_convex(power, c.proj, b))
                    throw Error(ErrorKind::counterexample, "ball of radius " + std::to_string(k) + " not convex");
                const Graph sub = induced_subgraph(power, b);
                if (!projection_pipeline(sub, restrict_projection(power, c.proj, b), why))
                    throw Error(ErrorKind::counterexample, "restriction to radius " + std::to_string(k) + ": " + why);
                ++balls;
            }
            return true;
        });
    }
    return tally.finish("P4", "tree power projections satisfy both axioms, also restricted to balls (100 trees)",
                        "exact exposure sweeps, acyclicity and traces all pass", Json{{"balls", balls}});
}

// ------------------------------------------------------------------ P5

ProjectionFamily canonical_tree_family(const Graph& tree, std::size_t d)
{
    ProjectionFamily fam;
    for (Vertex s : tree.vertices())
        fam.members.emplace(s, tree_power_projection(tree, d, s));
    return fam;
}

CriterionResult p5(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 5));
    std::map<std::string, std::size_t> hypotheses;

    auto check = [&](const Graph& power, const PermutationGroup& h, const ProjectionFamily& fam, const VertexSet& r) {
        const auto res = invariant_clique_via_projections(power, h, fam, r);
        ++hypotheses[to_string(res.hypothesis)];
        return res.orbit_set == h.orbit(r) && res.clique.is_subset_of(res.orbit_set) &&
               invariant_under_all(power, h, res.clique);
    };

    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t d = 1; d <= 3; ++d) {
            const Graph path = path_graph(n);
            const Graph power = rips_power_graph(path, d);
            const PermutationGroup h(power.vertices(), {path_reflection(n)});
            const ProjectionFamily fam = canonical_tree_family(path, d);
            for (std::size_t k = n / 2; k < n; ++k) {
                const VertexSet r = ball(path, VertexSet{0}, k);
                tally.run("path n=" + std::to_string(n) + " D=" + std::to_string(d) + " r=" + r.to_string(),
                          [&] { return check(power, h, fam, r); });
            }
        }

    for (std::size_t i = 0; i < 30; ++i) {
        const auto rt = rotational_tree(pick(rng, 1, 5), pick(rng, 2, 4), rng());
        const std::size_t d = pick(rng, 1, 3);
        const Graph power = rips_power_graph(rt.tree, d);
        const PermutationGroup h(power.vertices(), {rt.rotation});
        const ProjectionFamily fam = canonical_tree_family(rt.tree, d);
        // A subtree containing the fixed root: a ball plus one path to a deep vertex.
        const VertexSet core = ball(rt.tree, VertexSet{0}, pick(rng, 0, 2));
        const Vertex deep = static_cast<Vertex>(pick(rng, 0, rt.tree.order() - 1));
        const VertexSet r = core.united(VertexSet(least_geodesic(rt.tree, DistanceMatrix(rt.tree), deep, 0)));
        tally.run("rotational tree " + graph_text(rt.tree) + " r=" + r.to_string(),
                  [&] { return check(power, h, fam, r); });
    }

    // A family that is not equivariant: one row of the base-4 projection points the wrong way.
    {
        const Graph path = path_graph(5);
        const Graph power = rips_power_graph(path, 2);
        const PermutationGroup h(power.vertices(), {path_reflection(5)});
        ProjectionFamily fam;
        fam.members.emplace(0, tree_power_projection(path, 2, 0));
        DismantlingProjection skewed = tree_power_projection(path, 2, 4);
        skewed.table[3] = {VertexPair(2, 2)};
        fam.members.emplace(4, skewed);
        const VertexSet r{0, 1, 2, 3};
        tally.run("non-equivariant family accepted by the equivariance check",
                  [&] { return !verify_equivariant(power, fam, h); });
        tally.run("non-equivariant family accepted by the pipeline", [&] {
            try {
                invariant_clique_via_projections(power, h, fam, r);
            } catch (const Error& e) {
                return e.kind() == ErrorKind::hypothesis;
            }
            return false;
        });
    }
    Json ev = Json::object();
    for (const auto& [k, v] : hypotheses)
        ev[k] = v;
    return tally.finish("P5", "invariant cliques through convex sets and equivariant projection families",
                        "cliques invariant inside HR; skewed family rejected", ev);
}

// ------------------------------------------------------------------ P6

CriterionResult p6(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 6));
    std::size_t collapsed = 0;
    std::size_t stages = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const Graph g = mixed_dismantlable(rng, 9);
        const std::uint64_t collapse_seed = rng();
        tally.run("graph " + graph_text(g), [&] {
            const PermutationGroup aut = automorphism_group(g);
            const FixedSubcomplex fixed = fixed_subcomplex(g, aut);
            if (fixed.complex.empty() || !gf2_homology(fixed.complex).trivial())
                return false;
            collapsed += greedy_collapse(fixed.complex, collapse_seed);
            const auto cert = theorem15_reduction(g, aut);
            stages += cert.stages.size();
            return cert.stages.back().graph.order() == 1;
        });
    }
    tally.run("C6 with the antipodal map", [&] {
        const Graph c6 = cycle_graph(6);
        const PermutationGroup h(c6.vertices(), {compose(cycle_rotation(6), compose(cycle_rotation(6), cycle_rotation(6)))});
        const FixedSubcomplex fixed = fixed_subcomplex(c6, h);
        return fixed.complex.empty() && gf2_homology(fixed.complex).values == std::vector<std::size_t>{1};
    });
    return tally.finish("P6", "fixed subcomplexes nonempty and GF(2)-acyclic, reduction keeps homology (200 graphs)",
                        "all fixed sets acyclic; C6 antipodal fixed set empty",
                        Json{{"collapsed_to_point", collapsed}, {"reduction_stages", stages}});
}

// ------------------------------------------------------------------ P7

CriterionResult p7(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 7));
    std::size_t claims = 0;
    std::size_t neighbours = 0;
    std::size_t cross_checked = 0;
    std::map<std::size_t, std::size_t> deltas;
    const double densities[] = {0.0, 0.05, 0.1, 0.2, 0.35};
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = pick(rng, 4, 16);
        const Graph g = random_connected_graph(n, densities[i % 5], rng());
        std::vector<Vertex> o;
        const std::size_t osize = pick(rng, 1, 4);
        for (std::size_t k = 0; k < osize; ++k)
            o.push_back(static_cast<Vertex>(pick(rng, 0, n - 1)));
        tally.run("graph " + graph_text(g), [&] {
            const std::size_t delta = hyperbolicity_delta(g).delta;
            ++deltas[delta];
            const DistanceMatrix dist(g);
            const QuasiCentre qc = quasi_centre(g, VertexSet(o));
            const std::int32_t diam = set_diameter(g, dist, qc.centre);
            if (static_cast<std::size_t>(diam) > 4 * delta + 1)
                throw Error(ErrorKind::counterexample, "quasi-centre diameter " + std::to_string(diam) +
                                                           " exceeds 4*delta+1 for delta " + std::to_string(delta));
            const std::size_t d = 8 * delta + 1;
            if (delta >= 1)
                for (Vertex v : g.vertices()) {
                    if (static_cast<std::size_t>(distance_to_set(g, dist, v, qc.centre)) < 2 * delta)
                        continue;
                    const ClaimReport rep = lemma101_claim_check(g, delta, d, qc.centre, v);
                    for (const auto& nb : rep.neighbours) {
                        const auto expected = nb.proof_case == 1 ? static_cast<std::int32_t>(8 * delta + 1)
                                                                 : static_cast<std::int32_t>(d);
                        if (nb.d_tu > static_cast<std::int32_t>(d) || nb.bound != expected ||
                            nb.bound > static_cast<std::int32_t>(d))
                            return false;
                        ++neighbours;
                    }
                    ++claims;
                }
            std::size_t ecc = 0;
            for (Vertex v : g.vertices())
                ecc = std::max(ecc, static_cast<std::size_t>(distance_to_set(g, dist, v, qc.centre)));
            const Graph power = rips_power_graph(g, dist, d);
            for (std::size_t r = 0; r <= ecc; ++r) {
                const RipsBallResult res = rips_ball_order(g, delta, d, qc.centre, r);
                const Graph sub = induced_subgraph(power, res.ball);
                if (!verify_trace(sub, res.trace))
                    return false;
                if (n <= 12) {
                    if (!copwin_oracle(sub))
                        return false;
                    ++cross_checked;
                }
            }
            return true;
        });
    }
    Json dist_json = Json::object();
    for (const auto& [k, v] : deltas)
        dist_json[std::to_string(k)] = v;
    return tally.finish("P7", "quasi-centre bound, domination claim and ball orders with D = 8*delta+1 (100 graphs)",
                        "all bounds hold and all ball orders verify",
                        Json{{"claims", claims}, {"neighbour_chains", neighbours},
                             {"copwin_cross_checks", cross_checked}, {"delta_histogram", dist_json}});
}

// ------------------------------------------------------------------ P8

CriterionResult p8(const SuiteOptions& opt)
{
    Tally tally;
    std::mt19937_64 rng(derive_seed(opt.seed, 8));
    std::vector<std::pair<std::string, Graph>> trees;
    for (std::size_t rank = 1; rank <= 2; ++rank)
        for (std::size_t radius = 0; radius <= 4; ++radius)
            trees.emplace_back("free ball rank " + std::to_string(rank) + " radius " + std::to_string(radius),
                               free_group_ball(rank, radius));
    for (std::size_t i = 0; i < 50; ++i) {
        const Graph t = random_tree(pick(rng, 1, 40), rng());
        trees.emplace_back("tree " + graph_text(t), t);
    }
    for (const auto& [label, t] : trees)
        for (std::size_t d = 1; d <= 5; ++d) {
            tally.run(label + " D=" + std::to_string(d), [&, &t = t] {
                const DistanceMatrix dist(t);
                const std::size_t radius = static_cast<std::size_t>(dist.diameter());
                const RipsBallResult res = rips_ball_order(t, 0, d, VertexSet{t.vertices().front()}, radius);
                return res.ball == t.vertex_set() && res.branch == RipsBranch::tree_projection &&
                       verify_trace(rips_power_graph(t, dist, d), res.trace);
            });
        }
    return tally.finish("P8", "power graphs of trees and free-group balls dismantle via projections, D = 1..5",
                        "all traces verify");
}

// ------------------------------------------------------------------ P9

CriterionResult p9(const SuiteOptions&)
{
    Tally tally;
    tally.run("pentagon diagonals form a 5-cycle", [] {
        const Graph g = polygon_diagonal_graph(5);
        if (g.order() != 5 || !is_connected(g))
            return false;
        for (Vertex v : g.vertices())
            if (g.degree(v) != 2)
                return false;
        return true;
    });
    for (std::size_t n = 5; n <= 8; ++n)
        tally.run("polygon n=" + std::to_string(n) + " dismantlable or cop-win", [&] {
            const Graph g = polygon_diagonal_graph(n);
            return !is_dismantlable(g) && !copwin_oracle(g);
        });
    return tally.finish("P9", "polygon diagonal graphs n = 5..8 are neither dismantlable nor cop-win",
                        "negative controls behave");
}

using Runner = CriterionResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Runner>>& runners()
{
    static const std::vector<std::pair<std::string, Runner>> table{
        {"P1", p1}, {"P2", p2}, {"P3", p3}, {"P4", p4}, {"P5", p5},
        {"P6", p6}, {"P7", p7}, {"P8", p8}, {"P9", p9},
    };
    return table;
}

Json criterion_json(const CriterionResult& r)
{
    return Json{{"id", r.id},         {"title", r.title},       {"passed", r.passed}, {"cases", r.cases},
                {"failures", r.failures}, {"detail", r.detail}, {"evidence", r.evidence}};
}

} // namespace

std::vector<std::string> criterion_ids()
{
    std::vector<std::string> out;
    for (const auto& [id, unused] : runners())
        out.push_back(id);
    out.push_back("P10");
    return out;
}

CriterionResult run_criterion(const std::string& id, const SuiteOptions& options)
{
    for (const auto& [name, fn] : runners())
        if (name == id) {
            const auto start = std::chrono::steady_clock::now();
            CriterionResult r = fn(options);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    throw Error(ErrorKind::invalid_input, "unknown criterion '" + id + "'");
}

bool SuiteReport::passed() const
{
    return !criteria.empty() &&
           std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.passed; });
}

Json SuiteReport::to_json() const
{
    Json list = Json::array();
    for (const auto& r : criteria)
        list.push_back(criterion_json(r));
    return Json{{"seed", seed}, {"passed", passed()}, {"criteria", std::move(list)}};
}

SuiteReport run_suite(const SuiteOptions& options)
{
    const auto all = criterion_ids();
    std::vector<std::string> chosen = options.only.empty() ? all : options.only;
    if (chosen.empty())
        throw Error(ErrorKind::invalid_input, "empty criterion selection");
    for (const auto& id : chosen)
        if (std::find(all.begin(), all.end(), id) == all.end())
            throw Error(ErrorKind::invalid_input, "unknown criterion '" + id + "'");
    std::sort(chosen.begin(), chosen.end(), [&](const std::string& a, const std::string& b) {
        return std::find(all.begin(), all.end(), a) < std::find(all.begin(), all.end(), b);
    });
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    const bool determinism = chosen.back() == "P10";
    std::vector<std::string> battery(chosen.begin(), chosen.end() - (determinism ? 1 : 0));
    if (battery.empty())
        battery.assign(all.begin(), all.end() - 1);
    const bool report_battery = !(determinism && chosen.size() == 1);

    SuiteReport report;
    report.seed = options.seed;
    auto run_battery = [&](bool announce) {
        std::vector<CriterionResult> out;
        for (const auto& id : battery) {
            out.push_back(run_criterion(id, options));
            if (announce && options.on_result)
                options.on_result(out.back());
        }
        return out;
    };
    auto first = run_battery(report_battery);
    if (report_battery)
        report.criteria = first;

    if (determinism) {
        const auto start = std::chrono::steady_clock::now();
        SuiteReport a{options.seed, first};
        SuiteReport b{options.seed, run_battery(false)};
        const std::string da = a.to_json().dump();
        const std::string db = b.to_json().dump();
        CriterionResult r;
        r.id = "P10";
        r.title = "rerunning the battery with the same seed gives a byte-identical report";
        r.cases = battery.size();
        r.passed = da == db;
        r.failures = r.passed ? 0 : 1;
        if (r.passed) {
            r.detail = "identical reports (" + std::to_string(da.size()) + " bytes)";
        } else {
            const auto diff = std::mismatch(da.begin(), da.end(), db.begin(), db.end());
            r.detail = "reports differ at byte " + std::to_string(diff.first - da.begin());
        }
        r.evidence = Json{{"bytes", da.size()}};
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options.on_result)
            options.on_result(r);
        report.criteria.push_back(std::move(r));
    }
    return report;
}

} // namespace dismantle
