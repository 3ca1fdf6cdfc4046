#include <catch_amalgamated.hpp>

#include "dismantle/instances.hpp"
#include "dismantle/invariant_clique.hpp"
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

// Cliques fixed by every generator, found by enumerating all subsets.
std::vector<VertexSet> brute_invariant_cliques(const Graph& g, const PermutationGroup& h)
{
    const oracle::Dense d(g);
    const auto& elements = h.generators();
    std::vector<VertexSet> out;
    for (std::uint32_t m : oracle::cliques(d)) {
        std::vector<Vertex> members;
        for (std::size_t i = 0; i < d.n(); ++i)
            if (m >> i & 1)
                members.push_back(d.ids[i]);
        const VertexSet s(members);
        if (std::all_of(elements.begin(), elements.end(), [&](const Permutation& p) { return p(s) == s; }))
            out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("invariant cliques of named graphs")
{
    const Graph k4 = complete_graph(4);
    CHECK(invariant_clique(k4, automorphism_group(k4)).clique == k4.vertex_set());

    const Graph p3 = path_graph(3);
    CHECK(invariant_clique(p3, automorphism_group(p3)).clique == VertexSet{1});

    const Graph p4 = path_graph(4);
    CHECK(invariant_clique(p4, automorphism_group(p4)).clique == VertexSet{1, 2});

    const Graph w = wheel_graph(5);
    const auto res = invariant_clique(w, automorphism_group(w));
    CHECK(res.clique == VertexSet{0});
    REQUIRE_FALSE(res.steps.empty());
    CHECK(res.steps.front().kind == CliqueStepKind::remove_dominated);
    CHECK(res.steps.front().removed == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("twin classes go through the quotient case")
{
    const Graph k3 = complete_graph(3);
    const auto res = invariant_clique(k3, automorphism_group(k3));
    REQUIRE_FALSE(res.steps.empty());
    CHECK(res.steps.front().kind == CliqueStepKind::quotient);
    CHECK(res.clique == k3.vertex_set());
}

TEST_CASE("non-dismantlable graphs and foreign groups are rejected")
{
    CHECK(kind_of([] { invariant_clique(cycle_graph(5), automorphism_group(cycle_graph(5))); }) ==
          ErrorKind::not_dismantlable);
    CHECK(kind_of([] { invariant_clique(petersen_graph(), PermutationGroup::trivial(petersen_graph().vertices())); }) ==
          ErrorKind::not_dismantlable);
    const Graph p3 = path_graph(3);
    const Permutation bad = Permutation::from_map({{0, 1}, {1, 0}, {2, 2}});
    CHECK(kind_of([&] { invariant_clique(p3, PermutationGroup(p3.vertices(), {bad})); }) == ErrorKind::precondition);
}

TEST_CASE("invariant cliques are among the brute-force invariant cliques")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = seed % 2 ? random_symmetric_dismantlable(1 + seed % 9, seed)
                                 : random_dismantlable(1 + seed % 9, seed % 12, seed);
        const PermutationGroup aut = automorphism_group(g);
        const auto res = invariant_clique(g, aut, {seed % 5 == 0});
        const auto all = brute_invariant_cliques(g, aut);
        CHECK(std::find(all.begin(), all.end(), res.clique) != all.end());
        CHECK(verify_invariant_clique(g, aut, res.clique));
    }
}

TEST_CASE("verify_invariant_clique rejects non-cliques and moved sets")
{
    const Graph p4 = path_graph(4);
    const PermutationGroup aut = automorphism_group(p4);
    CHECK(verify_invariant_clique(p4, aut, VertexSet{1, 2}));
    CHECK_FALSE(verify_invariant_clique(p4, aut, VertexSet{0, 1}));
    CHECK_FALSE(verify_invariant_clique(p4, aut, VertexSet{0, 3}));
    CHECK_FALSE(verify_invariant_clique(p4, aut, VertexSet{}));
}
