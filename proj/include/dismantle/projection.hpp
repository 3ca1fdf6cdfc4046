#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dismantle/dismantling.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"

namespace dismantle {

/// Unordered pair, stored with first <= second. {a, a} is allowed.
struct VertexPair {
    Vertex first;
    Vertex second;

    VertexPair(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b)) {}

    bool coincident() const { return first == second; }
    bool contains(Vertex v) const { return first == v || second == v; }

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using PairSet = std::vector<VertexPair>; // sorted, unique

PairSet normalized(PairSet pairs);

/// A sigma-projection candidate: every rho other than sigma maps to a
/// nonempty set of pairs. Axioms are checked separately.
struct DismantlingProjection {
    Vertex sigma = 0;
    std::map<Vertex, PairSet> table;

    /// Union of the members of all pairs in table[rho] (empty if absent).
    VertexSet members(Vertex rho) const;

    friend bool operator==(const DismantlingProjection&, const DismantlingProjection&) = default;
};

/// Structural checks: sigma and every pair member are vertices, rows are
/// nonempty, and no row is keyed by sigma. With `require_total`, every
/// vertex other than sigma has a row. Throws Error(invalid_input).
void validate_projection(const Graph& g, const DismantlingProjection& p, bool require_total = true);

struct ExactMode {};
struct SampledMode {
    std::size_t count = 10000;
    std::uint64_t seed = 0;
};
using ExposureMode = std::variant<ExactMode, SampledMode>;

inline constexpr std::size_t exact_exposure_vertex_cap = 15;
inline constexpr std::size_t max_reported_failures = 64;

struct ExposureReport {
    bool sampled = false;
    std::size_t tested = 0;
    std::size_t failure_count = 0;
    std::vector<VertexSet> failures; // first max_reported_failures failing R

    bool passed() const { return failure_count == 0; }
    std::string label() const { return sampled ? "sampled" : "exact"; }
};

/// Axiom (i): every R with R \ {sigma} nonempty has rho in R \ {sigma} and a
/// pair of Pi(rho) whose both members pi satisfy N[rho] ∩ R ⊆ N[pi].
/// Rows missing from the table never count as exposed.
/// Exact mode throws Error(cap_exceeded) above exact_exposure_vertex_cap.
ExposureReport verify_axiom_exposed(const Graph& g, const DismantlingProjection& p, const ExposureMode& mode);

/// Vertices rho with a pair of Pi(rho) dominating N[rho] ∩ r, by id.
std::vector<Vertex> exposed_vertices(const Graph& g, const DismantlingProjection& p, const VertexSet& r);

/// Axiom (ii): a directed cycle rho_0 -> ... -> rho_{m-1} -> rho_0 with
/// rho_{i+1} ∈ Pi*(rho_i), if any. A self-loop is a cycle of length one.
std::optional<std::vector<Vertex>> verify_axiom_acyclic(const Graph& g, const DismantlingProjection& p);

/// Dismantling order from a projection. Each step removes the lowest-id
/// exposed vertex of the remaining set; its first witness is the lowest-id
/// member of its first qualifying pair. Witnesses pointing at removed
/// vertices are then redirected: whenever a later witness equals the vertex
/// removed at step i-1, it is replaced by the (already redirected) witness
/// of step i-1. Throws Error(precondition) naming the remaining set when no
/// exposed vertex exists; Error(internal) if the trace fails verification.
DismantlingTrace order_from_projection(const Graph& g, const DismantlingProjection& p);

/// Every pair of every row inside r \ {sigma} meets r.
bool is_pi_convex(const Graph& g, const DismantlingProjection& p, const VertexSet& r);

/// Projection on induced_subgraph(g, r) with rows P ∩ r (a single survivor
/// becomes a coincident pair). Throws Error(precondition) if r is not
/// convex, or if it is convex but misses sigma (which axiom (ii) forbids;
/// the message carries the offending chain).
DismantlingProjection restrict_projection(const Graph& g, const DismantlingProjection& p, const VertexSet& r);

/// Projections indexed by their base vertices.
struct ProjectionFamily {
    std::map<Vertex, DismantlingProjection> members;

    VertexSet bases() const;
};

/// h Pi_s(rho) = Pi_{hs}(h rho) for every base s, rho and generator of h.
/// Throws Error(precondition) if the base set is not h-invariant.
bool verify_equivariant(const Graph& g, const ProjectionFamily& fam, const PermutationGroup& h);

enum class FixedPointHypothesis { invariant_set, equivariant_family };

struct ProjectionCliqueResult {
    FixedPointHypothesis hypothesis;
    Vertex base;
    VertexSet orbit_set; // T = H r
    DismantlingTrace trace;
    VertexSet clique;
};

/// Invariant clique through a convex set. Hypothesis (i): r is h-invariant
/// and convex for some member of the family. Hypothesis (ii): the family is
/// equivariant over the orbit of some base and r is convex for each
/// projection in that orbit. The lowest base satisfying (i), else (ii), is
/// used. Then T = H r is checked convex, the projection restricted to T
/// yields a dismantling trace, and the invariant clique is computed on the
/// subgraph induced on T. Throws Error(hypothesis) if neither holds.
ProjectionCliqueResult invariant_clique_via_projections(const Graph& g, const PermutationGroup& h,
                                                        const ProjectionFamily& fam, const VertexSet& r);

/// On rips_power_graph(tree, d): Pi(rho) = {{u, u}} with u the tree
/// neighbour of rho towards sigma. Throws Error(invalid_input) if `tree` is
/// not a tree or d == 0, Error(unknown_vertex) for a foreign sigma.
DismantlingProjection tree_power_projection(const Graph& tree, std::size_t d, Vertex sigma);

/// Pi(rho) = {{u, u}} with u the second vertex of the lexicographically
/// least geodesic from rho to sigma in g.
DismantlingProjection geodesic_projection(const Graph& g, Vertex sigma);

const char* to_string(FixedPointHypothesis h);

} // namespace dismantle
