#include "dismantle/invariant_clique.hpp"

#include <string>

#include "dismantle/dismantling.hpp"

namespace dismantle {

namespace {

void check_transported(const Graph& g, const PermutationGroup& h, const char* where)
{
    if (!h.acts_on(g))
        throw Error(ErrorKind::internal, std::string("transported group is not an automorphism group after ") + where);
}

VertexSet solve(const Graph& g, const PermutationGroup& h, const InvariantCliqueOptions& options,
                std::vector<CliqueStep>& steps)
{
    if (options.debug && !is_dismantlable(g))
        throw Error(ErrorKind::internal, "intermediate graph on " + std::to_string(g.order()) +
                                             " vertices is not dismantlable");
    if (g.order() == 1) {
        steps.push_back({CliqueStepKind::base, 1, {}, {}});
        return g.vertex_set();
    }

    if (has_equal_neighborhoods(g)) {
        const Quotient q = equal_neighborhood_quotient(g);
        CliqueStep step{CliqueStepKind::quotient, g.order(), {}, {}};
        for (const auto& cls : q.classes)
            if (cls.size() > 1)
                step.classes.push_back(cls);
        steps.push_back(std::move(step));
        const PermutationGroup pushed = h.pushed_to(q);
        check_transported(q.graph, pushed, "quotient");
        return q.preimage(solve(q.graph, pushed, options, steps));
    }

    std::vector<Vertex> dominated;
    std::vector<Vertex> kept;
    for (Vertex v : g.vertices())
        (is_dominated(g, v) ? dominated : kept).push_back(v);
    if (kept.empty())
        throw Error(ErrorKind::internal, "no undominated vertex although all closed neighbourhoods differ");
    if (dominated.empty())
        throw Error(ErrorKind::internal, "no dominated vertex in a dismantlable graph");
    const VertexSet keep(std::move(kept));
    for (Vertex v : dominated) {
        bool outside = false;
        for (Vertex w : dominators(g, v))
            outside = outside || keep.contains(w);
        if (!outside)
            throw Error(ErrorKind::internal, "vertex " + std::to_string(v) +
                                                 " is dominated only by other dominated vertices");
    }
    steps.push_back({CliqueStepKind::remove_dominated, g.order(), VertexSet(std::move(dominated)), {}});

    const Graph sub = induced_subgraph(g, keep);
    if (!h.is_invariant(keep))
        throw Error(ErrorKind::internal, "undominated vertices are not invariant");
    const PermutationGroup restricted = h.restricted_to(keep);
    check_transported(sub, restricted, "removing dominated vertices");
    return solve(sub, restricted, options, steps);
}

} // namespace

InvariantCliqueResult invariant_clique(const Graph& g, const PermutationGroup& h, const InvariantCliqueOptions& options)
{
    if (!is_dismantlable(g))
        throw Error(ErrorKind::not_dismantlable, "invariant_clique: graph is not dismantlable");
    if (!h.acts_on(g))
        throw Error(ErrorKind::precondition, "invariant_clique: group does not act on the graph by automorphisms");
    InvariantCliqueResult result;
    result.clique = solve(g, h, options, result.steps);
    if (!verify_invariant_clique(g, h, result.clique))
        throw Error(ErrorKind::internal, "invariant_clique: result failed verification");
    return result;
}

bool verify_invariant_clique(const Graph& g, const PermutationGroup& h, const VertexSet& s)
{
    for (Vertex v : s)
        if (!g.contains(v))
            return false;
    if (!is_clique(g, s))
        return false;
    for (const auto& p : h.generators())
        if (p.domain() != g.vertices() || p(s) != s)
            return false;
    return true;
}

const char* to_string(CliqueStepKind kind)
{
    switch (kind) {
    case CliqueStepKind::quotient: return "quotient";
    case CliqueStepKind::remove_dominated: return "remove_dominated";
    case CliqueStepKind::base: return "base";
    }
    return "?";
}

} // namespace dismantle
