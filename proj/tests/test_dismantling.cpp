#include <catch_amalgamated.hpp>

#include "dismantle/dismantling.hpp"
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

Graph without(const Graph& g, Vertex v)
{
    VertexSet rest = g.vertex_set();
    rest.erase(v);
    return induced_subgraph(g, rest);
}

} // namespace

TEST_CASE("dismantling orders of named graphs")
{
    const auto k4 = dismantling_order(complete_graph(4), 1);
    REQUIRE(k4);
    CHECK(verify_trace(complete_graph(4), *k4));
    CHECK_FALSE(dismantling_order(cycle_graph(5), 1));
    CHECK_FALSE(dismantling_order(cycle_graph(4), 1));

    const auto p3 = dismantling_order(path_graph(3), 0);
    REQUIRE(p3);
    CHECK(p3->order.back() == 1);
    CHECK(p3->witnesses == std::vector<Vertex>{1, 1});

    const Graph single({7}, {});
    const auto one = dismantling_order(single, 0);
    REQUIRE(one);
    CHECK(one->order == std::vector<Vertex>{7});
    CHECK(one->witnesses.empty());
}

TEST_CASE("dismantling order input errors")
{
    CHECK(kind_of([] { dismantling_order(Graph{}, 0); }) == ErrorKind::invalid_input);
    const Graph two = oracle::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(kind_of([&] { dismantling_order(two, 0); }) == ErrorKind::disconnected);
    const auto parts = dismantling_orders_by_component(two, 0);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0]);
    CHECK(parts[1]);
    CHECK_FALSE(is_dismantlable(two));
}

TEST_CASE("verify_trace checks the witness condition literally")
{
    const Graph p3 = path_graph(3);
    CHECK(verify_trace(p3, {{0, 2, 1}, {1, 1}}));
    CHECK_FALSE(verify_trace(p3, {{1, 0, 2}, {0, 2}}));
    CHECK(first_trace_violation(p3, {{1, 0, 2}, {0, 2}}) == std::size_t{0});
    CHECK_FALSE(verify_trace(p3, {{0, 2, 1}, {0, 1}})); // witness equal to the vertex
    CHECK_FALSE(verify_trace(p3, {{2, 0, 1}, {0, 1}})); // witness not adjacent
    CHECK(verify_trace(complete_graph(3), {{2, 0, 1}, {1, 1}}));
    CHECK(verify_trace(Graph({4}, {}), {{4}, {}}));
    CHECK(kind_of([&] { verify_trace(p3, {{0, 1}, {1}}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([&] { verify_trace(p3, {{0, 1, 2}, {1}}); }) == ErrorKind::invalid_input);
}

TEST_CASE("greedy order agrees with exhaustive search and the pursuit game")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 2 + seed % 8;
        const Graph g = oracle::random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 9), seed);
        if (!is_connected(g))
            continue;
        const bool expected = oracle::dismantlable(g);
        CHECK(is_dismantlable(g) == expected);
        CHECK(copwin_oracle(g) == expected);
        if (const auto t = dismantling_order(g, seed))
            CHECK(verify_trace(g, *t));
    }
}

TEST_CASE("pursuit game on named graphs")
{
    CHECK(copwin_oracle(path_graph(6)));
    CHECK(copwin_oracle(random_tree(25, 4)));
    CHECK_FALSE(copwin_oracle(cycle_graph(5)));
    CHECK_FALSE(copwin_oracle(petersen_graph()));
    CHECK(copwin_oracle(wheel_graph(6)));
    // components are played separately
    CHECK(copwin_oracle(oracle::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(copwin_oracle(oracle::from_edges(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}})));
}

TEST_CASE("tie-break confluence across seeds")
{
    for (std::uint64_t g_seed = 0; g_seed < 500; ++g_seed) {
        const Graph g = random_dismantlable(1 + g_seed % 14, g_seed % 20, g_seed);
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto t = dismantling_order(g, s * 7919 + 1);
            REQUIRE(t);
            REQUIRE(verify_trace(g, *t));
        }
    }
}

TEST_CASE("orders are deterministic per seed")
{
    const Graph g = random_dismantlable(12, 15, 3);
    CHECK(*dismantling_order(g, 11) == *dismantling_order(g, 11));
}

TEST_CASE("order repair on named graphs")
{
    const Graph k4 = complete_graph(4);
    const auto t = *dismantling_order(k4, 2);
    const auto k3 = remove_and_reorder(k4, t, 0);
    CHECK(k3.order.size() == 3);
    CHECK(verify_trace(without(k4, 0), k3));

    const Graph p3 = path_graph(3);
    const DismantlingTrace tp{{0, 2, 1}, {1, 1}};
    const auto repaired = remove_and_reorder(p3, tp, 2);
    CHECK(verify_trace(without(p3, 2), repaired));

    const Graph star = star_graph(3);
    const auto ts = *dismantling_order(star, 5);
    CHECK(verify_trace(without(star, 2), remove_and_reorder(star, ts, 2)));

    CHECK(kind_of([&] { remove_and_reorder(p3, tp, 1); }) == ErrorKind::precondition);
}

TEST_CASE("order repair moves the chain endpoint into the freed slot")
{
    // Path 0-1-2-3 with order (3, 0, 2, 1): removing 0 must keep a valid order
    // even though 0 is witnessed by 1 and sits in the middle.
    const Graph p4 = path_graph(4);
    const DismantlingTrace t{{3, 0, 2, 1}, {2, 1, 1}};
    REQUIRE(verify_trace(p4, t));
    const auto r = remove_and_reorder(p4, t, 0);
    CHECK(verify_trace(without(p4, 0), r));
    CHECK(r.order.size() == 3);
}

TEST_CASE("order repair for every dominated vertex of random dismantlable graphs")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = seed % 2 ? random_dismantlable(1 + seed % 12, seed % 25, seed)
                                 : random_symmetric_dismantlable(1 + seed % 12, seed);
        const auto t = *dismantling_order(g, seed);
        for (Vertex s : g.vertices())
            if (is_dominated(g, s))
                CHECK(verify_trace(without(g, s), remove_and_reorder(g, t, s)));
    }
}

TEST_CASE("random dismantlable generator")
{
    CHECK(random_dismantlable(1, 0, 0).order() == 1);
    const Graph g6 = random_dismantlable(6, 0, 7);
    CHECK(g6.order() == 6);
    CHECK(dismantling_order(g6, 0));
    CHECK(random_dismantlable(5, 10, 1) == complete_graph(5));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        CHECK(oracle::dismantlable(random_dismantlable(2 + seed % 10, seed % 7, seed)));
}
