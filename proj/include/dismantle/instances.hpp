#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"
#include "dismantle/projection.hpp"

namespace dismantle {

// Standard families. Vertex ids are 0..n-1.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves); // centre 0
Graph wheel_graph(std::size_t rim);   // hub 0, rim 1..rim in cyclic order
Graph petersen_graph();               // outer 0-4, inner 5-9 as a pentagram, spokes i ~ i+5
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Dispatch by name: path n, cycle n, complete n, star k, wheel k,
/// petersen, grid r c. Throws Error(invalid_input) for unknown kinds or
/// wrong parameter counts.
Graph standard_graph(std::string_view kind, const std::vector<std::size_t>& params);

/// Uniform labelled tree on 0..n-1 from a random Prüfer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Random spanning tree plus each remaining edge with probability p.
Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed);

/// Dismantlable graph with nontrivial symmetry more often than not: a small
/// random dismantlable core grown by true twins and pairs of pendant leaves.
Graph random_symmetric_dismantlable(std::size_t n, std::uint64_t seed);

/// A cyclic rotation of the ids 0..n-1 and the reflection i -> -i (mod n),
/// as automorphisms of cycle_graph(n) / path reversal for path_graph(n).
Permutation cycle_rotation(std::size_t n);
Permutation cycle_reflection(std::size_t n);
Permutation path_reflection(std::size_t n);

/// `copies` copies of a random tree on `branch` vertices, each attached by
/// its vertex 0 to a common root 0; `rotation` cycles the copies.
struct RotationalTree {
    Graph tree;
    Permutation rotation;
};

RotationalTree rotational_tree(std::size_t branch, std::size_t copies, std::uint64_t seed);

inline constexpr std::size_t default_free_ball_cap = 1'000'000;

/// Ball of the given radius around the identity in the Cayley graph of the
/// free group of the given rank on its standard basis. Vertex 0 is the
/// identity; vertices are numbered breadth-first. Throws Error(cap_exceeded)
/// before building more than `cap` vertices.
Graph free_group_ball(std::size_t rank, std::size_t radius, std::size_t cap = default_free_ball_cap);

/// Diagonal {i, j}, i < j, of a convex n-gon with corners 0..n-1.
struct PolygonDiagonal {
    Vertex i = 0;
    Vertex j = 0;

    friend bool operator==(const PolygonDiagonal&, const PolygonDiagonal&) = default;
    friend auto operator<=>(const PolygonDiagonal&, const PolygonDiagonal&) = default;
};

/// All diagonals, lexicographically; a diagonal's vertex id is its index.
std::vector<PolygonDiagonal> polygon_diagonals(std::size_t n);
Vertex diagonal_id(std::size_t n, PolygonDiagonal d);

/// Corners 0..n-1; throws Error(invalid_input) for sides and non-corners.
PolygonDiagonal make_diagonal(std::size_t n, Vertex a, Vertex b);

/// Endpoints strictly interleave around the polygon.
bool crosses(PolygonDiagonal a, PolygonDiagonal b);

/// Diagonals as vertices, edges between noncrossing pairs. n >= 4.
Graph polygon_diagonal_graph(std::size_t n);

struct SurgeryResult {
    PairSet pairs;   // over diagonal ids
    bool undefined;  // every candidate pair fell on polygon sides
};

/// Outermost surgery of rho in direction of sigma. Noncrossing: {{sigma,
/// sigma}}. Crossing: for each endpoint p of sigma the pair {(p,x), (p,y)}
/// with x, y the endpoints of rho; members that are polygon sides are
/// dropped, a lone survivor becomes a coincident pair, and empty pairs
/// vanish. Throws Error(invalid_input) when sigma == rho.
SurgeryResult polygon_surgery(std::size_t n, PolygonDiagonal sigma, PolygonDiagonal rho);

struct PolygonProjection {
    DismantlingProjection projection; // rows only where surgery is defined
    std::vector<Vertex> undefined_rows;
};

PolygonProjection polygon_projection(std::size_t n, PolygonDiagonal sigma);

/// Rotation and reflection of the polygon acting on diagonal ids.
std::vector<Permutation> polygon_dihedral_generators(std::size_t n);

} // namespace dismantle
