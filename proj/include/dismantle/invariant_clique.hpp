#pragma once

#include <cstddef>
#include <vector>

#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"

namespace dismantle {

enum class CliqueStepKind { quotient, remove_dominated, base };

/// One level of the recursion, in the ids of that level's graph.
struct CliqueStep {
    CliqueStepKind kind;
    std::size_t vertex_count;
    VertexSet removed;              // remove_dominated: the dominated vertices
    std::vector<VertexSet> classes; // quotient: classes of size > 1
};

struct InvariantCliqueResult {
    VertexSet clique;
    std::vector<CliqueStep> steps;
};

struct InvariantCliqueOptions {
    /// Re-check dismantlability of every intermediate graph.
    bool debug = false;
};

/// Clique of a finite dismantlable graph fixed setwise by every element of h.
///
/// While the graph has more than one vertex: if two vertices share a closed
/// neighbourhood, pass to the equal-neighbourhood quotient and later take the
/// full preimage; otherwise delete every dominated vertex. The group is
/// carried along each step and each transported generator is re-checked.
///
/// Throws Error(not_dismantlable) and Error(precondition) (h does not act on
/// g); Error(internal) if a structural assertion or the final check fails.
InvariantCliqueResult invariant_clique(const Graph& g, const PermutationGroup& h,
                                       const InvariantCliqueOptions& options = {});

/// is_clique(g, s) and h s = s. Checking generators suffices for a finite group.
bool verify_invariant_clique(const Graph& g, const PermutationGroup& h, const VertexSet& s);

const char* to_string(CliqueStepKind kind);

} // namespace dismantle
