#include <catch_amalgamated.hpp>

#include "dismantle/group.hpp"
#include "dismantle/instances.hpp"
#include "oracles.hpp"

using namespace dismantle;

TEST_CASE("closed neighbourhoods of small named graphs")
{
    CHECK(closed_neighborhood(complete_graph(3), 0) == VertexSet{0, 1, 2});
    CHECK(closed_neighborhood(path_graph(3), 0) == VertexSet{0, 1});
    CHECK(closed_neighborhood(cycle_graph(5), 2) == VertexSet{1, 2, 3});
    CHECK_THROWS_MATCHES(closed_neighborhood(path_graph(3), 7), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::unknown_vertex;
                         }));
}

TEST_CASE("dominators allow equal neighbourhoods")
{
    CHECK(dominators(path_graph(3), 0) == VertexSet{1});
    CHECK(dominators(complete_graph(4), 0) == VertexSet{1, 2, 3});
    CHECK(dominators(complete_graph(2), 1) == VertexSet{0});
    const Graph c5 = cycle_graph(5);
    for (Vertex v : c5.vertices())
        CHECK(dominators(c5, v).empty());
}

TEST_CASE("dominators agree with the dense oracle on random graphs")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_graph(3 + seed % 8, 0.25 + 0.1 * static_cast<double>(seed % 5), seed);
        for (Vertex v : g.vertices()) {
            const VertexSet dom = dominators(g, v);
            const auto expected = oracle::dominators(g, v);
            CHECK(std::vector<Vertex>(expected.begin(), expected.end()) == dom.items());
            CHECK(is_dominated(g, v) == !expected.empty());
            CHECK(closed_neighborhood(g, v).contains(v));
            for (Vertex p : dom)
                CHECK(g.adjacent(p, v));
        }
    }
}

TEST_CASE("graph construction rejects malformed input")
{
    auto kind_of = [](auto&& build) {
        try {
            build();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::internal;
    };
    CHECK(kind_of([] { Graph({0, 1}, {{0, 0}}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { Graph({0, 1}, {{0, 1}, {1, 0}}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { Graph({0, 1}, {{0, 2}}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { Graph({0, 0}, {}); }) == ErrorKind::invalid_input);
}

TEST_CASE("induced subgraphs keep ids and edges")
{
    const Graph c5 = cycle_graph(5);
    const Graph p = induced_subgraph(c5, VertexSet{0, 1, 2});
    CHECK(p.vertices() == std::vector<Vertex>{0, 1, 2});
    CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(induced_subgraph(c5, c5.vertex_set()) == c5);
    CHECK(induced_subgraph(complete_graph(4), VertexSet{0, 1}).edge_count() == 1);

    const Graph q = induced_subgraph(c5, VertexSet{1, 3, 4});
    CHECK(q.vertices() == std::vector<Vertex>{1, 3, 4});
    CHECK(q.edges() == std::vector<Edge>{{3, 4}});
}

TEST_CASE("cliques are nonempty and pairwise adjacent")
{
    CHECK(is_clique(complete_graph(4), VertexSet{0, 1, 2}));
    CHECK_FALSE(is_clique(cycle_graph(5), VertexSet{0, 1, 2}));
    CHECK_FALSE(is_clique(complete_graph(4), VertexSet{}));
    CHECK(is_clique(cycle_graph(5), VertexSet{3}));
}

TEST_CASE("equal-neighbourhood quotient on named graphs")
{
    const Quotient k3 = equal_neighborhood_quotient(complete_graph(3));
    CHECK(k3.graph.order() == 1);
    CHECK(k3.classes == std::vector<VertexSet>{VertexSet{0, 1, 2}});

    const Quotient c5 = equal_neighborhood_quotient(cycle_graph(5));
    CHECK(c5.graph == cycle_graph(5));
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.class_of.at(v) == v);

    // a=0, b=1 both joined to the edge c=2, d=3: N[c] = N[d] = {0,1,2,3}.
    const Graph kite = oracle::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Quotient q = equal_neighborhood_quotient(kite);
    CHECK(q.class_of.at(0) != q.class_of.at(1));
    CHECK(q.class_of.at(2) == q.class_of.at(3));
    CHECK(q.graph.order() == 3);
}

TEST_CASE("quotient properties on random graphs")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = seed % 2 ? random_symmetric_dismantlable(2 + seed % 10, seed)
                                 : oracle::random_graph(2 + seed % 9, 0.5, seed);
        const Quotient q = equal_neighborhood_quotient(g);
        std::size_t covered = 0;
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            CHECK(is_clique(g, q.classes[c]));
            covered += q.classes[c].size();
            for (Vertex v : q.classes[c]) {
                CHECK(q.class_of.at(v) == static_cast<Vertex>(c));
                CHECK(closed_neighborhood(g, v) == closed_neighborhood(g, q.classes[c].front()));
            }
        }
        CHECK(covered == g.order());
        // classes adjacent iff representatives adjacent
        for (std::size_t a = 0; a < q.classes.size(); ++a)
            for (std::size_t b = a + 1; b < q.classes.size(); ++b)
                CHECK(q.graph.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) ==
                      g.adjacent(q.classes[a].front(), q.classes[b].front()));
        CHECK_FALSE(has_equal_neighborhoods(q.graph));
        CHECK(equal_neighborhood_quotient(q.graph).graph == q.graph);
    }
}

TEST_CASE("automorphisms map dominators to dominators")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_symmetric_dismantlable(3 + seed % 6, seed);
        for (const auto& h : automorphism_group(g).elements())
            for (Vertex v : g.vertices())
                CHECK(h(dominators(g, v)) == dominators(g, h(v)));
    }
}

TEST_CASE("vertex sets")
{
    const VertexSet a{5, 1, 3, 1};
    CHECK(a.items() == std::vector<Vertex>{1, 3, 5});
    CHECK(a.to_string() == "{1, 3, 5}");
    CHECK(a.united(VertexSet{2}) == VertexSet{1, 2, 3, 5});
    CHECK(a.intersected(VertexSet{3, 4, 5}) == VertexSet{3, 5});
    CHECK(a.without(VertexSet{3}) == VertexSet{1, 5});
    CHECK(VertexSet{3}.is_subset_of(a));
}

TEST_CASE("connectivity helpers")
{
    const Graph two = oracle::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    CHECK(connected_components(two) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2, 3}});
    CHECK(is_tree(path_graph(5)));
    CHECK_FALSE(is_tree(cycle_graph(5)));
}
