#include <catch_amalgamated.hpp>

#include "dismantle/group.hpp"
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

} // namespace

TEST_CASE("permutation basics")
{
    const Permutation r = cycle_rotation(5);
    CHECK(r(0) == 1);
    CHECK(r(4) == 0);
    CHECK(compose(r.inverse(), r).is_identity());
    CHECK(r(VertexSet{0, 1}) == VertexSet{1, 2});
    CHECK(kind_of([] { Permutation({0, 1, 2}, {0, 0, 1}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([&] { r(9); }) == ErrorKind::unknown_vertex);
}

TEST_CASE("group closure of named generators")
{
    const Graph c5 = cycle_graph(5);
    CHECK(group_closure(c5, {cycle_rotation(5)}, 100).order() == 5);
    CHECK(group_closure(c5, {Permutation::identity(c5.vertices())}, 100).order() == 1);
    CHECK(group_closure(c5, {cycle_rotation(5), cycle_reflection(5)}, 100).order() == 10);
    CHECK(kind_of([&] { group_closure(c5, {cycle_rotation(5), cycle_reflection(5)}, 5); }) ==
          ErrorKind::cap_exceeded);
    const Permutation swap01 = Permutation::from_map({{0, 1}, {1, 0}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(kind_of([&] { group_closure(c5, {swap01}, 100); }) == ErrorKind::precondition);
}

TEST_CASE("automorphism group orders against permutation enumeration")
{
    CHECK(automorphism_group(cycle_graph(5)).order() == 10);
    CHECK(automorphism_group(path_graph(3)).order() == 2);
    CHECK(automorphism_group(complete_graph(4)).order() == 24);
    CHECK(automorphism_group(petersen_graph()).order() == 120);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = seed % 3 == 0 ? random_symmetric_dismantlable(2 + seed % 7, seed)
                                      : oracle::random_graph(2 + seed % 6, 0.45, seed);
        const PermutationGroup aut = automorphism_group(g);
        const auto brute = oracle::automorphisms(g);
        REQUIRE(aut.order() == brute.size());
        const auto elements = aut.elements();
        CHECK(std::all_of(elements.begin(), elements.end(), [&](const Permutation& p) { return is_automorphism(g, p); }));
        CHECK(aut.known_order() == brute.size());
    }
}

TEST_CASE("automorphism search respects its vertex cap")
{
    CHECK(kind_of([] { automorphism_group(path_graph(13)); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("orbits and invariance")
{
    const Graph c6 = cycle_graph(6);
    const Permutation r = cycle_rotation(6);
    const PermutationGroup antipodal(c6.vertices(), {compose(r, compose(r, r))});
    CHECK(antipodal.order() == 2);
    CHECK(antipodal.orbit(VertexSet{0, 1}) == VertexSet{0, 1, 3, 4});
    CHECK(antipodal.is_invariant(VertexSet{0, 3}));
    CHECK_FALSE(antipodal.is_invariant(VertexSet{0, 1}));
    CHECK(antipodal.acts_on(c6));
    CHECK(antipodal.restricted_to(VertexSet{0, 3}).order() == 2);
    CHECK(kind_of([&] { antipodal.restricted_to(VertexSet{0, 1}); }) == ErrorKind::precondition);
}

TEST_CASE("group pushed to the equal-neighbourhood quotient")
{
    // Two true twins 1, 2 hanging off 0, and twins 3, 4 hanging off 0.
    const Graph g = oracle::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    const PermutationGroup aut = automorphism_group(g);
    CHECK(aut.order() == 8);
    const Quotient q = equal_neighborhood_quotient(g);
    REQUIRE(q.graph.order() == 3);
    const PermutationGroup pushed = aut.pushed_to(q);
    CHECK(pushed.acts_on(q.graph));
    CHECK(pushed.order() == 2);
}
