#include <catch_amalgamated.hpp>

#include "dismantle/hyperbolic.hpp"
#include "dismantle/instances.hpp"
#include "oracles.hpp"

using namespace dismantle;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

Graph connected_sample(std::uint64_t seed, std::size_t max_n)
{
    return random_connected_graph(2 + seed % (max_n - 1), 0.05 + 0.05 * static_cast<double>(seed % 6), seed);
}

// C8 with a pendant path 0-8-9-10 hanging off vertex 0.
Graph cycle_with_tail()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 8; ++i)
        edges.emplace_back(i, (i + 1) % 8);
    edges.emplace_back(0, 8);
    edges.emplace_back(8, 9);
    edges.emplace_back(9, 10);
    return oracle::from_edges(11, edges);
}

std::size_t eccentricity_to(const Graph& g, const VertexSet& c)
{
    const DistanceMatrix dist(g);
    std::size_t r = 0;
    for (Vertex v : g.vertices())
        r = std::max(r, static_cast<std::size_t>(distance_to_set(g, dist, v, c)));
    return r;
}

} // namespace

TEST_CASE("distances, balls and power graphs")
{
    const Graph p5 = path_graph(5);
    const DistanceMatrix d(p5);
    CHECK(d(0, 4) == 4);
    CHECK(d.diameter() == 4);
    CHECK(ball(p5, VertexSet{2}, 1) == VertexSet{1, 2, 3});
    CHECK(ball(p5, VertexSet{0, 4}, 0) == VertexSet{0, 4});
    CHECK(ball(p5, VertexSet{0}, 9) == p5.vertex_set());
    CHECK(kind_of([&] { ball(p5, VertexSet{}, 1); }) == ErrorKind::invalid_input);

    CHECK(rips_power_graph(p5, 1) == p5);
    CHECK(rips_power_graph(p5, 4) == complete_graph(5));
    const Graph p52 = rips_power_graph(p5, 2);
    CHECK(p52.edge_count() == 7);
    CHECK(p52.adjacent(0, 2));
    CHECK_FALSE(p52.adjacent(0, 3));
    CHECK(kind_of([&] { rips_power_graph(p5, 0); }) == ErrorKind::invalid_input);

    CHECK(least_geodesic(cycle_graph(6), DistanceMatrix(cycle_graph(6)), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("hyperbolicity of named graphs")
{
    CHECK(hyperbolicity_delta(random_tree(20, 1)).delta == 0);
    CHECK(hyperbolicity_delta(complete_graph(5)).delta == 0);
    CHECK(hyperbolicity_delta(cycle_graph(4)).delta == 1);
    CHECK(oracle::delta(cycle_graph(4)) == 1);
    CHECK(hyperbolicity_delta(cycle_graph(8)).delta == static_cast<std::size_t>(oracle::delta(cycle_graph(8))));
    CHECK(kind_of([] { hyperbolicity_delta(oracle::from_edges(3, {{0, 1}})); }) == ErrorKind::disconnected);
    CHECK(kind_of([] { hyperbolicity_delta(Graph{}); }) == ErrorKind::invalid_input);
}

TEST_CASE("hyperbolicity agrees with the literal definition")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Graph g = connected_sample(seed, 9);
        const auto expected = static_cast<std::size_t>(oracle::delta(g));
        const auto fast = hyperbolicity_delta(g);
        CHECK(fast.delta == expected);
        CHECK(fast.exact);
        const auto listed = hyperbolicity_delta_by_enumeration(g, default_geodesic_cap, false);
        CHECK(listed.delta == expected);
    }
}

TEST_CASE("hyperbolicity witnesses realise the reported delta")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = connected_sample(seed, 12);
        const auto rep = hyperbolicity_delta(g);
        if (rep.delta == 0)
            continue;
        const DistanceMatrix dist(g);
        const auto& w = rep.witness;
        REQUIRE(std::find(w.uv.begin(), w.uv.end(), w.t) != w.uv.end());
        CHECK(w.uv.front() == w.u);
        CHECK(w.uv.back() == w.v);
        CHECK(w.vw.front() == w.v);
        CHECK(w.wu.back() == w.u);
        std::int32_t nearest = 1 << 30;
        for (const auto& side : {w.vw, w.wu})
            for (Vertex s : side)
                nearest = std::min(nearest, dist(g.index_of(w.t), g.index_of(s)));
        CHECK(static_cast<std::size_t>(nearest) == rep.delta);
        for (const auto& side : {w.uv, w.vw, w.wu})
            for (std::size_t i = 0; i + 1 < side.size(); ++i)
                CHECK(g.adjacent(side[i], side[i + 1]));
    }
}

TEST_CASE("a geodesic cap gives monotone lower bounds")
{
    // Grid graphs have binomially many geodesics between opposite corners.
    const Graph grid = grid_graph(4, 4);
    const auto exact = hyperbolicity_delta(grid).delta;
    CHECK(kind_of([&] { hyperbolicity_delta_by_enumeration(grid, 2, false); }) == ErrorKind::cap_exceeded);
    std::size_t previous = 0;
    for (std::size_t cap : {1, 2, 4, 8, 100}) {
        const auto rep = hyperbolicity_delta_by_enumeration(grid, cap, true);
        CHECK(rep.delta >= previous);
        CHECK(rep.delta <= exact);
        previous = rep.delta;
        if (rep.exact)
            CHECK(rep.delta == exact);
    }
    bool capped = false;
    const DistanceMatrix dist(grid);
    CHECK(enumerate_geodesics(grid, dist, 0, 15, 1000, capped).size() == 20);
    CHECK_FALSE(capped);
    CHECK(enumerate_geodesics(grid, dist, 0, 15, 5, capped).size() == 5);
    CHECK(capped);
}

TEST_CASE("quasi-centres")
{
    const Graph p5 = path_graph(5);
    const auto qc = quasi_centre(p5, VertexSet{0, 4});
    CHECK(qc.centre == VertexSet{2});
    CHECK(qc.radius == 2);
    const auto single = quasi_centre(p5, VertexSet{3});
    CHECK(single.centre == VertexSet{3});
    CHECK(single.radius == 0);
    CHECK(kind_of([&] { quasi_centre(p5, VertexSet{}); }) == ErrorKind::invalid_input);

    const Graph c6 = cycle_graph(6);
    const auto qc6 = quasi_centre(c6, VertexSet{0, 3});
    const DistanceMatrix d6(c6);
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < 6; ++v)
        if (std::max(d6(v, 0), d6(v, 3)) == 2)
            expected.push_back(v);
    CHECK(qc6.radius == 2);
    CHECK(qc6.centre == VertexSet(expected));
    CHECK(set_diameter(c6, d6, qc6.centre) <= static_cast<std::int32_t>(4 * hyperbolicity_delta(c6).delta + 1));
}

TEST_CASE("quasi-centre diameter bound on random graphs")
{
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = random_connected_graph(2 + seed % 19, 0.03 * static_cast<double>(seed % 8), seed);
        const auto delta = hyperbolicity_delta(g).delta;
        std::vector<Vertex> o;
        for (std::size_t k = 0; k < 1 + rng() % 4; ++k)
            o.push_back(static_cast<Vertex>(rng() % g.order()));
        const auto qc = quasi_centre(g, VertexSet(o));
        const DistanceMatrix dist(g);
        // brute-force argmin
        std::int32_t best = 1 << 30;
        for (Vertex v : g.vertices()) {
            std::int32_t e = 0;
            for (Vertex x : o)
                e = std::max(e, dist(g.index_of(v), g.index_of(x)));
            best = std::min(best, e);
        }
        CHECK(static_cast<std::int32_t>(qc.radius) == best);
        CHECK(set_diameter(g, dist, qc.centre) <= static_cast<std::int32_t>(4 * delta + 1));
    }
}

TEST_CASE("domination claim on a cycle with a tail")
{
    const Graph g = cycle_with_tail();
    const std::size_t delta = hyperbolicity_delta(g).delta;
    REQUIRE(delta >= 1);
    const std::size_t d = 8 * delta + 1;
    const auto qc = quasi_centre(g, VertexSet{4, 10});
    const DistanceMatrix dist(g);
    Vertex far = qc.centre.front();
    for (Vertex v : g.vertices())
        if (distance_to_set(g, dist, v, qc.centre) > distance_to_set(g, dist, far, qc.centre))
            far = v;
    if (static_cast<std::size_t>(distance_to_set(g, dist, far, qc.centre)) >= 2 * delta) {
        const auto rep = lemma101_claim_check(g, delta, d, qc.centre, far);
        const Graph power = induced_subgraph(rips_power_graph(g, d), ball(g, qc.centre, rep.a));
        const auto nv = closed_neighborhood(power, rep.v);
        CHECK(nv.is_subset_of(closed_neighborhood(power, rep.u)));
        for (const auto& nb : rep.neighbours)
            CHECK(nv.contains(nb.t));
    }
}

TEST_CASE("claim preconditions")
{
    const Graph c8 = cycle_graph(8);
    const std::size_t delta = hyperbolicity_delta(c8).delta;
    REQUIRE(delta >= 1);
    // a vertex too close to the centre
    CHECK(kind_of([&] { lemma101_claim_check(c8, delta, 8 * delta + 1, VertexSet{0}, 1); }) ==
          ErrorKind::precondition);
    // D too small
    CHECK(kind_of([&] { lemma101_claim_check(c8, delta, 8 * delta, VertexSet{0}, 4); }) == ErrorKind::precondition);
    // a tree has delta 0; claiming 1 is refused
    const Graph t = path_graph(9);
    CHECK(kind_of([&] { lemma101_claim_check(t, 1, 9, VertexSet{0}, 8); }) == ErrorKind::precondition);
    CHECK(kind_of([&] { lemma101_claim_check(c8, delta + 1, 8 * delta + 9, VertexSet{0}, 4); }) ==
          ErrorKind::precondition);
}

TEST_CASE("claim checks and their inequality chains on random graphs")
{
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = connected_sample(seed, 16);
        const std::size_t delta = hyperbolicity_delta(g).delta;
        if (delta == 0)
            continue;
        const std::size_t d = 8 * delta + 1;
        const auto qc = quasi_centre(g, VertexSet{g.vertices().front(), g.vertices().back()});
        const DistanceMatrix dist(g);
        const Graph power = rips_power_graph(g, dist, d);
        for (Vertex v : g.vertices()) {
            const auto a = static_cast<std::size_t>(distance_to_set(g, dist, v, qc.centre));
            if (a < 2 * delta)
                continue;
            const auto rep = lemma101_claim_check(g, delta, d, qc.centre, v);
            CHECK(dist(g.index_of(rep.u), g.index_of(v)) == static_cast<std::int32_t>(2 * delta));
            CHECK(dist(g.index_of(rep.w), g.index_of(v)) == static_cast<std::int32_t>(a));
            CHECK(qc.centre.contains(rep.w));
            const Graph sub = induced_subgraph(power, ball(g, dist, qc.centre, a));
            CHECK(closed_neighborhood(sub, v).is_subset_of(closed_neighborhood(sub, rep.u)));
            for (const auto& nb : rep.neighbours) {
                CHECK(nb.d_tu <= static_cast<std::int32_t>(d));
                CHECK(nb.d_tu == dist(g.index_of(nb.t), g.index_of(rep.u)));
                CHECK(nb.bound <= static_cast<std::int32_t>(d));
                CHECK_FALSE(nb.chain.empty());
                CHECK((nb.proof_case == 1 || nb.proof_case == 2));
            }
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("ball orders of Rips graphs")
{
    const Graph t = random_tree(15, 2);
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto res = rips_ball_order(t, 0, d, VertexSet{3}, static_cast<std::size_t>(DistanceMatrix(t).diameter()));
        CHECK(res.branch == RipsBranch::tree_projection);
        CHECK(res.ball == t.vertex_set());
        CHECK(verify_trace(rips_power_graph(t, d), res.trace));
    }

    const Graph g = cycle_with_tail();
    const std::size_t delta = hyperbolicity_delta(g).delta;
    const std::size_t d = 8 * delta + 1;
    const auto c = quasi_centre(g, g.vertex_set()).centre;
    const Graph power = rips_power_graph(g, d);
    for (std::size_t r = 0; r <= eccentricity_to(g, c); ++r) {
        const auto res = rips_ball_order(g, delta, d, c, r);
        const Graph sub = induced_subgraph(power, res.ball);
        CHECK(verify_trace(sub, res.trace));
        CHECK(copwin_oracle(sub));
        if (r < 2 * delta)
            CHECK(res.branch == RipsBranch::clique);
    }
}

TEST_CASE("ball orders on random graphs are cop-win balls")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = connected_sample(seed, 14);
        const std::size_t delta = hyperbolicity_delta(g).delta;
        const std::size_t d = 8 * delta + 1;
        const auto c = quasi_centre(g, VertexSet{g.vertices().front()}).centre;
        const Graph power = rips_power_graph(g, d);
        for (std::size_t r = 0; r <= eccentricity_to(g, c); ++r) {
            const auto res = rips_ball_order(g, delta, d, c, r);
            const Graph sub = induced_subgraph(power, res.ball);
            CHECK(verify_trace(sub, res.trace));
            CHECK(copwin_oracle(sub));
        }
    }
}

TEST_CASE("block graphs take the geodesic branch")
{
    const Graph g = oracle::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    REQUIRE(hyperbolicity_delta(g).delta == 0);
    const auto res = rips_ball_order(g, 0, 1, VertexSet{0}, 2);
    CHECK(res.branch == RipsBranch::geodesic_projection);
    CHECK(verify_trace(g, res.trace));
}

TEST_CASE("invariant subgraphs")
{
    const Graph star = star_graph(4);
    const auto sub = invariant_subgraph_for(star, automorphism_group(star), VertexSet{1}, 1);
    CHECK(sub.orbit == VertexSet{1, 2, 3, 4});
    CHECK(sub.centre.centre == VertexSet{0});
    CHECK(sub.vertices == star.vertex_set());

    const Graph p5 = path_graph(5);
    const auto self = invariant_subgraph_for(p5, PermutationGroup::trivial(p5.vertices()), VertexSet{2}, 1);
    CHECK(self.r == 0);
    CHECK(self.vertices == VertexSet{2});

    const Graph c8 = cycle_with_tail();
    const std::size_t delta = hyperbolicity_delta(c8).delta;
    const Graph c6 = cycle_graph(6);
    const PermutationGroup refl(c6.vertices(), {cycle_reflection(6)});
    const auto inv = invariant_subgraph_for(c6, refl, VertexSet{1}, 8 * hyperbolicity_delta(c6).delta + 1);
    CHECK(refl.is_invariant(inv.vertices));
    CHECK(inv.vertices.contains(1));
    CHECK(kind_of([&] { invariant_subgraph_for(c8, PermutationGroup::trivial(c8.vertices()), VertexSet{1}, 8 * delta); }) ==
          ErrorKind::precondition);
}
