#include <catch_amalgamated.hpp>

#include "dismantle/instances.hpp"
#include "dismantle/io.hpp"

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

TEST_CASE("graphs round-trip through json")
{
    for (const Graph& g : {path_graph(1), cycle_graph(7), petersen_graph(), random_tree(12, 5)})
        CHECK(graph_from_json(parse_json(to_json(g).dump())) == g);
    const Graph counted = graph_from_json(parse_json(R"({"vertices": 3, "edges": [[0, 1], [1, 2]]})"));
    CHECK(counted == path_graph(3));
    const Graph sparse = graph_from_json(parse_json(R"({"vertices": [4, 10, 7], "edges": [[4, 10]]})"));
    CHECK(sparse.vertices() == std::vector<Vertex>{4, 7, 10});
    CHECK(sparse.adjacent(4, 10));
}

TEST_CASE("malformed input")
{
    CHECK(kind_of([] { parse_json("{"); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { graph_from_json(parse_json(R"({"edges": []})")); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { graph_from_json(parse_json(R"({"vertices": 2, "edges": [[0]]})")); }) ==
          ErrorKind::invalid_input);
    CHECK(kind_of([] { graph_from_json(parse_json(R"({"vertices": 2, "edges": [[0, 5]]})")); }) ==
          ErrorKind::invalid_input);
    CHECK(kind_of([] { graph_from_json(parse_json(R"({"vertices": "x", "edges": []})")); }) ==
          ErrorKind::invalid_input);
    CHECK(kind_of([] { vertex_set_from_json(parse_json(R"([1, "a"])")); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { read_json_file("/nonexistent/graph.json"); }) == ErrorKind::invalid_input);
}

TEST_CASE("permutations list images in domain order")
{
    const Graph c5 = cycle_graph(5);
    const Permutation r = cycle_rotation(5);
    const Json j = to_json(r);
    CHECK(j == Json::parse("[1, 2, 3, 4, 0]"));
    CHECK(permutation_from_json(j, c5.vertices()) == r);
    const std::vector<Vertex> domain{3, 8, 9};
    const Permutation p = permutation_from_json(Json::parse("[8, 3, 9]"), domain);
    CHECK(p(3) == 8);
    CHECK(p(8) == 3);
    CHECK(kind_of([&] { permutation_from_json(Json::parse("[8, 8, 9]"), domain); }) == ErrorKind::invalid_input);
    CHECK(kind_of([&] { permutation_from_json(Json::parse("[8, 3]"), domain); }) == ErrorKind::invalid_input);
}

TEST_CASE("groups, traces and projections round-trip")
{
    const Graph c5 = cycle_graph(5);
    const PermutationGroup h(c5.vertices(), {cycle_rotation(5), cycle_reflection(5)});
    const PermutationGroup back = group_from_json(parse_json(to_json(h).dump()), c5);
    CHECK(back.order() == 10);
    CHECK(kind_of([&] { group_from_json(Json::parse(R"({"generators": [[1, 0, 2, 3, 4]]})"), c5); }) ==
          ErrorKind::precondition);

    const Graph p4 = path_graph(4);
    const DismantlingTrace t = *dismantling_order(p4, 0);
    const DismantlingTrace t2 = trace_from_json(parse_json(to_json(t).dump()));
    CHECK(t2.order == t.order);
    CHECK(t2.witnesses == t.witnesses);

    const DismantlingProjection proj = geodesic_projection(p4, 2);
    const DismantlingProjection proj2 = projection_from_json(parse_json(to_json(proj).dump()));
    CHECK(proj2.sigma == proj.sigma);
    CHECK(proj2.table == proj.table);
    ProjectionFamily fam;
    fam.members[2] = proj;
    fam.members[0] = geodesic_projection(p4, 0);
    CHECK(family_from_json(to_json(fam)).bases() == VertexSet{0, 2});

    const SimplicialComplex k({{0, 1, 2}, {2, 3}});
    CHECK(complex_from_json(to_json(k)).maximal_faces() == k.maximal_faces());
}

TEST_CASE("reports serialise deterministically")
{
    const Graph g = random_symmetric_dismantlable(8, 4);
    const auto a = to_json(invariant_clique(g, automorphism_group(g))).dump();
    const auto b = to_json(invariant_clique(g, automorphism_group(g))).dump();
    CHECK(a == b);
    CHECK(to_dot(path_graph(2)).find("0 -- 1") != std::string::npos);
}
