#include <catch_amalgamated.hpp>

#include "dismantle/instances.hpp"
#include "dismantle/metric.hpp"
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

bool regular(const Graph& g, std::size_t k)
{
    return std::all_of(g.vertices().begin(), g.vertices().end(), [&](Vertex v) { return g.degree(v) == k; });
}

// Diagonals {a,b}, {c,d} cross iff exactly one of c, d lies strictly
// between a and b going around the polygon.
bool brute_crosses(std::size_t n, PolygonDiagonal x, PolygonDiagonal y)
{
    auto inside = [&](Vertex p) {
        for (auto q = (x.i + 1) % static_cast<Vertex>(n); q != x.j; q = (q + 1) % static_cast<Vertex>(n))
            if (q == p)
                return true;
        return false;
    };
    if (y.i == x.i || y.i == x.j || y.j == x.i || y.j == x.j)
        return false;
    return inside(y.i) != inside(y.j);
}

} // namespace

TEST_CASE("standard families")
{
    CHECK(standard_graph("cycle", {5}) == cycle_graph(5));
    const Graph w = standard_graph("wheel", {5});
    CHECK(w.order() == 6);
    CHECK(w.degree(0) == 5);
    CHECK(induced_subgraph(w, VertexSet{1, 2, 3, 4, 5}).edge_count() == 5);
    const Graph pet = standard_graph("petersen", {});
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(regular(pet, 3));
    CHECK(standard_graph("grid", {2, 3}).edge_count() == 7);
    CHECK(standard_graph("star", {3}).edge_count() == 3);
    CHECK(standard_graph("complete", {4}).edge_count() == 6);
    CHECK(kind_of([] { standard_graph("moebius", {4}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { standard_graph("grid", {4}); }) == ErrorKind::invalid_input);
}

TEST_CASE("random trees")
{
    CHECK(random_tree(1, 0).order() == 1);
    CHECK(random_tree(2, 0).edge_count() == 1);
    const Graph t = random_tree(30, 3);
    CHECK(t.order() == 30);
    CHECK(t.edge_count() == 29);
    CHECK(is_connected(t));
    CHECK(is_tree(t));
    CHECK(random_tree(30, 3) == t);

    // Cayley's formula: all 16 labelled trees on 4 vertices should appear.
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed)
        seen.insert(random_tree(4, seed).edges());
    CHECK(seen.size() == 16);
}

TEST_CASE("random connected and symmetric generators")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_connected_graph(1 + seed % 15, 0.2, seed);
        CHECK(is_connected(g));
        const Graph s = random_symmetric_dismantlable(1 + seed % 12, seed);
        CHECK(s.order() == 1 + seed % 12);
        CHECK(oracle::dismantlable(s));
    }
}

TEST_CASE("rotational trees")
{
    const auto rt = rotational_tree(3, 4, 8);
    CHECK(rt.tree.order() == 13);
    CHECK(is_tree(rt.tree));
    CHECK(is_automorphism(rt.tree, rt.rotation));
    CHECK(rt.rotation(0) == 0);
    CHECK(rt.rotation(1) == 4);
}

TEST_CASE("free group balls")
{
    CHECK(free_group_ball(2, 1) == star_graph(4));
    CHECK(free_group_ball(1, 5).order() == 11);
    CHECK(is_tree(free_group_ball(1, 5)));
    CHECK(DistanceMatrix(free_group_ball(1, 5)).diameter() == 10);
    const Graph b = free_group_ball(2, 3);
    CHECK(b.order() == 53);
    CHECK(is_tree(b));
    CHECK(b.degree(0) == 4);
    CHECK(kind_of([] { free_group_ball(3, 10, 1000); }) == ErrorKind::cap_exceeded);
    CHECK(kind_of([] { free_group_ball(0, 1); }) == ErrorKind::invalid_input);
}

TEST_CASE("polygon diagonals and crossings")
{
    CHECK(polygon_diagonals(6).size() == 9);
    CHECK(kind_of([] { make_diagonal(6, 0, 1); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { make_diagonal(6, 0, 6); }) == ErrorKind::invalid_input);
    for (std::size_t n = 4; n <= 9; ++n) {
        const auto diags = polygon_diagonals(n);
        const auto gens = polygon_dihedral_generators(n);
        const Graph g = polygon_diagonal_graph(n);
        for (const auto& h : gens)
            CHECK(is_automorphism(g, h));
        for (const auto& a : diags) {
            CHECK(diags[static_cast<std::size_t>(diagonal_id(n, a))] == a);
            for (const auto& b : diags) {
                CHECK(crosses(a, b) == crosses(b, a));
                CHECK(crosses(a, b) == brute_crosses(n, a, b));
                if (a != b)
                    CHECK(g.adjacent(diagonal_id(n, a), diagonal_id(n, b)) == !crosses(a, b));
            }
        }
    }
}

TEST_CASE("polygon diagonal graphs are negative controls")
{
    const Graph sq = polygon_diagonal_graph(4);
    CHECK(sq.order() == 2);
    CHECK(sq.edge_count() == 0);
    const Graph pent = polygon_diagonal_graph(5);
    CHECK(pent.order() == 5);
    CHECK(regular(pent, 2));
    CHECK(is_connected(pent));
    for (std::size_t n = 5; n <= 8; ++n) {
        const Graph g = polygon_diagonal_graph(n);
        CHECK_FALSE(is_dismantlable(g));
        CHECK_FALSE(copwin_oracle(g));
    }
    CHECK(kind_of([] { polygon_diagonal_graph(3); }) == ErrorKind::invalid_input);
}

TEST_CASE("outermost surgery")
{
    const auto hex = polygon_surgery(6, make_diagonal(6, 0, 3), make_diagonal(6, 1, 4));
    CHECK_FALSE(hex.undefined);
    CHECK(hex.pairs == normalized({VertexPair(diagonal_id(6, {0, 4}), diagonal_id(6, {0, 4})),
                                   VertexPair(diagonal_id(6, {1, 3}), diagonal_id(6, {1, 3}))}));

    const PolygonDiagonal s{0, 2};
    const auto apart = polygon_surgery(6, s, make_diagonal(6, 3, 5));
    CHECK(apart.pairs == PairSet{VertexPair(diagonal_id(6, s), diagonal_id(6, s))});

    const auto pent = polygon_surgery(5, make_diagonal(5, 0, 2), make_diagonal(5, 1, 4));
    CHECK(pent.pairs == PairSet{VertexPair(diagonal_id(5, {2, 4}), diagonal_id(5, {2, 4}))});

    CHECK(kind_of([] { polygon_surgery(6, {0, 3}, {0, 3}); }) == ErrorKind::invalid_input);
}

TEST_CASE("surgery projections locate axiom failures")
{
    for (std::size_t n = 5; n <= 7; ++n) {
        const Graph g = polygon_diagonal_graph(n);
        const auto pp = polygon_projection(n, make_diagonal(n, 0, 2));
        validate_projection(g, pp.projection, false);
        const auto rep = verify_axiom_exposed(g, pp.projection, ExactMode{});
        CHECK_FALSE(rep.passed());
        CHECK_FALSE(rep.failures.empty());
        for (Vertex rho : pp.undefined_rows)
            CHECK_FALSE(pp.projection.table.count(rho));
    }
}
