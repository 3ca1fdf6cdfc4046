#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dismantle/graph.hpp"

namespace dismantle {

/// A dismantling order together with one dominating witness per step.
///
/// For every i < m: witnesses[i] lies in {order[i], ..., order[m-1]},
/// differs from order[i], and N(order[i]) ∩ suffix ⊆ N(witnesses[i]).
struct DismantlingTrace {
    std::vector<Vertex> order;
    std::vector<Vertex> witnesses; // size order.size() - 1 (empty for one vertex)

    friend bool operator==(const DismantlingTrace&, const DismantlingTrace&) = default;
};

/// Greedy elimination. Vertices are ranked by a seed-keyed shuffle; at each
/// step the best-ranked dominated vertex is removed with its best-ranked
/// dominator as witness. Since removing any dominated vertex preserves
/// dismantlability, a greedy failure means the graph is not dismantlable.
///
/// Throws Error(invalid_input) for an empty graph and Error(disconnected)
/// for a disconnected one; use dismantling_orders_by_component for those.
std::optional<DismantlingTrace> dismantling_order(const Graph& g, std::uint64_t seed);

/// One entry per connected component (components in order of smallest id).
std::vector<std::optional<DismantlingTrace>> dismantling_orders_by_component(const Graph& g, std::uint64_t seed);

/// Connected and greedy elimination succeeds. Never throws for nonempty g.
bool is_dismantlable(const Graph& g);

/// Index of the first step whose witness condition fails, if any.
/// Throws Error(invalid_input) when the order is not a permutation of the
/// vertex set or the witness count is wrong.
std::optional<std::size_t> first_trace_violation(const Graph& g, const DismantlingTrace& t);
bool verify_trace(const Graph& g, const DismantlingTrace& t);

/// Repairs a dismantling order after deleting a dominated vertex, following
/// the witness-chain construction: start from a dominator k of sigma and walk
/// k_i forward through the recorded witnesses. If the chain never reaches
/// sigma's slot the old order survives with redirected witnesses; otherwise
/// the vertex l where it first does is moved into sigma's slot.
///
/// The result is checked with verify_trace before it is returned.
DismantlingTrace remove_and_reorder(const Graph& g, const DismantlingTrace& t, Vertex sigma);

/// One-cop pursuit game solved by backward induction over
/// (cop, robber, side to move). Components are solved independently and the
/// verdicts conjoined.
bool copwin_oracle(const Graph& g);

/// Grows a dismantlable graph vertex by vertex: each new vertex copies a
/// random part of an existing vertex's closed neighbourhood. Then adds up to
/// `extra_edges` edges that keep the recorded elimination order valid
/// (the graph becomes complete if enough are requested).
Graph random_dismantlable(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

} // namespace dismantle
