#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dismantle/dismantling.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"
#include "dismantle/metric.hpp"

namespace dismantle {

/// A triangle u, v, w with geodesics, and a vertex t on uv whose distance
/// to the other two sides equals the reported delta.
struct ThinTriangleWitness {
    Vertex u = 0, v = 0, w = 0, t = 0;
    std::vector<Vertex> uv, vw, wu;
};

struct HyperbolicityReport {
    std::size_t delta = 0;
    bool exact = true; // false: geodesic cap hit, delta is a lower bound
    ThinTriangleWitness witness;
    std::uint64_t max_geodesics_per_pair = 0; // saturates at UINT64_MAX
    std::size_t capped_pairs = 0;
};

/// Least delta such that for all u, v, w, all geodesics uv, vw, wu and all
/// t on uv, some vertex of vw ∪ wu is within delta of t.
///
/// Exact without listing geodesics: the sides vw and wu can be chosen
/// independently, so for each t on some u-v geodesic it suffices to know,
/// per side, the largest possible distance from t to a geodesic, which is a
/// bottleneck path problem on the shortest-path DAG. Trees short-circuit to 0.
/// Throws Error(disconnected) or Error(invalid_input) for an empty graph.
HyperbolicityReport hyperbolicity_delta(const Graph& g);

inline constexpr std::size_t default_geodesic_cap = 10000;

/// Literal version: lists up to `geodesic_cap` geodesics per ordered pair
/// (depth-first, neighbours by id) and maximises over them. Hitting the cap
/// gives a lower bound (exact = false) if `allow_lower_bound`, else throws
/// Error(cap_exceeded). Raising the cap only adds geodesics, so the bound
/// never decreases.
HyperbolicityReport hyperbolicity_delta_by_enumeration(const Graph& g, std::size_t geodesic_cap,
                                                       bool allow_lower_bound);

/// All geodesics from `from` to `to`, depth-first with neighbours by id,
/// at most `cap` of them. `capped` reports truncation.
std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, const DistanceMatrix& dist, Vertex from,
                                                     Vertex to, std::size_t cap, bool& capped);

struct QuasiCentre {
    VertexSet centre;
    std::size_t radius = 0;
};

/// radius = min over v of max over x in o of d(v, x); centre = its argmin.
/// Throws Error(invalid_input) for empty o, Error(disconnected).
QuasiCentre quasi_centre(const Graph& g, const VertexSet& o);

/// One neighbour t of v in the power graph and the case of the argument
/// that bounds d(t, u).
struct ClaimNeighbour {
    Vertex t = 0;
    int proof_case = 0; // 1: u' on a geodesic wt, 2: u' on a geodesic tv
    Vertex u_prime = 0;
    std::int32_t d_tv = 0, d_tu = 0, d_tu_prime = 0, d_uu_prime = 0;
    std::int32_t bound = 0; // 8 delta + 1 in case 1, D in case 2
    std::vector<std::string> chain;
};

struct ClaimReport {
    Vertex v = 0, w = 0, u = 0;
    std::size_t a = 0;
    std::int32_t centre_diameter = 0;
    std::vector<Vertex> geodesic_vw;
    std::size_t ball_size = 0;
    std::vector<ClaimNeighbour> neighbours;
};

struct HyperbolicOptions {
    /// Accept a delta larger than the computed one.
    bool allow_delta_above = false;
};

/// Domination claim for the power graph P_D on B_a(C), a = d(v, C): with w
/// the lowest-id vertex of C at distance a and u the vertex at distance
/// 2 delta from v on the lexicographically least geodesic vw, every t in
/// B_a(C) with d(t, v) <= D has d(t, u) <= D. Checked both directly and
/// through the two-case inequality chain (geodesics wt and tv are the
/// lexicographically least ones; case 1 is preferred).
///
/// Preconditions (Error(precondition)): delta >= 1, D >= 8 delta + 1,
/// a >= 2 delta, diam(C) <= 4 delta + 1, and delta equal to the computed
/// hyperbolicity (or above it with allow_delta_above). A failed check is
/// Error(counterexample).
ClaimReport lemma101_claim_check(const Graph& g, std::size_t delta, std::size_t d, const VertexSet& c, Vertex v,
                                 const HyperbolicOptions& options = {});

enum class RipsBranch { clique, claim, tree_projection, geodesic_projection };

struct RipsBallResult {
    RipsBranch branch = RipsBranch::clique;
    VertexSet ball;
    DismantlingTrace trace; // on induced_subgraph(rips_power_graph(g, d), ball)
    std::vector<ClaimReport> claims;
};

/// Dismantling order of P_D restricted to B_r(C).
///
/// delta >= 1: vertices are peeled level by level from distance r down to
/// 2 delta (ascending id within a level), each with the claim's u as
/// witness; the rest spans a clique. delta = 0: a projection towards the
/// lowest-id vertex of C (tree parent, or next step on the least geodesic
/// when g is not a tree) restricted to the ball. Same preconditions as
/// lemma101_claim_check except a; the trace is verified before return.
RipsBallResult rips_ball_order(const Graph& g, std::size_t delta, std::size_t d, const VertexSet& c, std::size_t r,
                               const HyperbolicOptions& options = {});

struct InvariantSubgraph {
    std::size_t delta = 0;
    VertexSet orbit;
    QuasiCentre centre;
    std::size_t r = 0;
    VertexSet vertices;
    RipsBallResult order;
};

/// B_r(C) for C the quasi-centre of the orbit h s and r minimal with
/// s ⊆ B_r(C), checked h-invariant and dismantled with rips_ball_order.
/// Throws Error(precondition) unless D >= 8 delta + 1 for the computed delta.
InvariantSubgraph invariant_subgraph_for(const Graph& g, const PermutationGroup& h, const VertexSet& s, std::size_t d);

const char* to_string(RipsBranch b);

} // namespace dismantle
