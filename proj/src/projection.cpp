#include "dismantle/projection.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "dismantle/invariant_clique.hpp"
#include "dismantle/metric.hpp"

namespace dismantle {

PairSet normalized(PairSet pairs)
{
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

VertexSet DismantlingProjection::members(Vertex rho) const
{
    auto it = table.find(rho);
    if (it == table.end())
        return {};
    std::vector<Vertex> out;
    for (const auto& pr : it->second) {
        out.push_back(pr.first);
        out.push_back(pr.second);
    }
    return VertexSet(std::move(out));
}

void validate_projection(const Graph& g, const DismantlingProjection& p, bool require_total)
{
    if (!g.contains(p.sigma))
        throw Error(ErrorKind::invalid_input, "projection base " + std::to_string(p.sigma) + " is not a vertex");
    for (const auto& [rho, pairs] : p.table) {
        if (rho == p.sigma)
            throw Error(ErrorKind::invalid_input, "projection has a row for its own base");
        if (!g.contains(rho))
            throw Error(ErrorKind::invalid_input, "projection row " + std::to_string(rho) + " is not a vertex");
        if (pairs.empty())
            throw Error(ErrorKind::invalid_input, "projection row " + std::to_string(rho) + " is empty");
        for (const auto& pr : pairs)
            if (!g.contains(pr.first) || !g.contains(pr.second))
                throw Error(ErrorKind::invalid_input, "projection row " + std::to_string(rho) +
                                                          " mentions a vertex outside the graph");
    }
    if (require_total && p.table.size() + 1 != g.order())
        throw Error(ErrorKind::invalid_input, "projection table is not total on the vertices other than its base");
}

namespace {

// Per row: position of rho and N[a] ∩ N[b] for each pair, in pair order.
struct ExposureRows {
    std::vector<std::size_t> rho;
    std::vector<std::vector<Bits>> allowed;
    std::vector<std::vector<Vertex>> first_member;
};

ExposureRows exposure_rows(const Graph& g, const DismantlingProjection& p)
{
    ExposureRows rows;
    for (const auto& [rho, pairs] : p.table) {
        rows.rho.push_back(g.index_of(rho));
        auto& allowed = rows.allowed.emplace_back();
        auto& first = rows.first_member.emplace_back();
        for (const auto& pr : pairs) {
            allowed.push_back(g.closed_row(g.index_of(pr.first)) & g.closed_row(g.index_of(pr.second)));
            first.push_back(pr.first);
        }
    }
    return rows;
}

// Index into the row's pairs of the first pair exposing it within r.
std::optional<std::size_t> exposing_pair(const Graph& g, const ExposureRows& rows, std::size_t k, const Bits& r)
{
    const Bits local = g.closed_row(rows.rho[k]) & r;
    for (std::size_t i = 0; i < rows.allowed[k].size(); ++i)
        if (local.is_subset_of(rows.allowed[k][i]))
            return i;
    return std::nullopt;
}

bool has_exposed(const Graph& g, const ExposureRows& rows, const Bits& r)
{
    for (std::size_t k = 0; k < rows.rho.size(); ++k)
        if (r.test(rows.rho[k]) && exposing_pair(g, rows, k, r))
            return true;
    return false;
}

} // namespace

ExposureReport verify_axiom_exposed(const Graph& g, const DismantlingProjection& p, const ExposureMode& mode)
{
    validate_projection(g, p, false);
    const std::size_t n = g.order();
    const std::size_t sigma_pos = g.index_of(p.sigma);
    ExposureReport report;

    auto record = [&](const Bits& r) {
        ++report.failure_count;
        if (report.failures.size() < max_reported_failures)
            report.failures.push_back(g.to_set(r));
    };

    if (std::holds_alternative<ExactMode>(mode)) {
        if (n > exact_exposure_vertex_cap)
            throw Error(ErrorKind::cap_exceeded, "exact exposure check is limited to " +
                                                     std::to_string(exact_exposure_vertex_cap) +
                                                     " vertices; use sampled mode");
        // Bit masks over positions make the 2^n sweep cheap.
        std::vector<std::uint32_t> row_mask(n);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                if (g.closed_row(v).test(w))
                    row_mask[v] |= std::uint32_t{1} << w;
        std::vector<std::size_t> rho;
        std::vector<std::vector<std::uint32_t>> allowed;
        for (const auto& [r, pairs] : p.table) {
            rho.push_back(g.index_of(r));
            auto& a = allowed.emplace_back();
            for (const auto& pr : pairs)
                a.push_back(row_mask[g.index_of(pr.first)] & row_mask[g.index_of(pr.second)]);
        }
        const std::uint32_t sigma_bit = std::uint32_t{1} << sigma_pos;
        const std::uint32_t total = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
        for (std::uint32_t r = 1; r != 0 && r <= total; ++r) {
            if ((r & ~sigma_bit) == 0)
                continue;
            ++report.tested;
            bool exposed = false;
            for (std::size_t k = 0; k < rho.size() && !exposed; ++k) {
                if (!(r >> rho[k] & 1))
                    continue;
                const std::uint32_t local = row_mask[rho[k]] & r;
                for (std::uint32_t a : allowed[k])
                    if ((local & ~a) == 0) {
                        exposed = true;
                        break;
                    }
            }
            if (!exposed) {
                Bits bits(n);
                for (std::size_t v = 0; v < n; ++v)
                    if (r >> v & 1)
                        bits.set(v);
                record(bits);
            }
            if (r == total)
                break;
        }
        return report;
    }

    const auto& sampled = std::get<SampledMode>(mode);
    report.sampled = true;
    const ExposureRows rows = exposure_rows(g, p);
    std::mt19937_64 rng(sampled.seed);
    std::bernoulli_distribution coin(0.5);
    Bits sigma_only(n);
    sigma_only.set(sigma_pos);
    for (std::size_t i = 0; i < sampled.count; ++i) {
        Bits r(n);
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng))
                r.set(v);
        if ((r - sigma_only).none())
            continue;
        ++report.tested;
        if (!has_exposed(g, rows, r))
            record(r);
    }
    return report;
}

std::vector<Vertex> exposed_vertices(const Graph& g, const DismantlingProjection& p, const VertexSet& r)
{
    const ExposureRows rows = exposure_rows(g, p);
    const Bits rb = g.to_bits(r);
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < rows.rho.size(); ++k)
        if (rb.test(rows.rho[k]) && exposing_pair(g, rows, k, rb))
            out.push_back(g.id(rows.rho[k]));
    return out;
}

std::optional<std::vector<Vertex>> verify_axiom_acyclic(const Graph& g, const DismantlingProjection& p)
{
    validate_projection(g, p, false);
    enum : char { white, grey, black };
    std::map<Vertex, char> colour;
    std::vector<Vertex> stack;

    // Iterative DFS; the grey vertices on `stack` form the current path.
    for (const auto& [start, unused] : p.table) {
        if (colour[start] != white)
            continue;
        std::vector<std::pair<Vertex, std::vector<Vertex>>> frames;
        auto push = [&](Vertex v) {
            colour[v] = grey;
            stack.push_back(v);
            const VertexSet m = p.members(v);
            frames.emplace_back(v, std::vector<Vertex>(m.items().rbegin(), m.items().rend()));
        };
        push(start);
        while (!frames.empty()) {
            auto& [v, todo] = frames.back();
            if (todo.empty()) {
                colour[v] = black;
                stack.pop_back();
                frames.pop_back();
                continue;
            }
            const Vertex next = todo.back();
            todo.pop_back();
            if (colour[next] == grey) {
                auto from = std::find(stack.begin(), stack.end(), next);
                return std::vector<Vertex>(from, stack.end());
            }
            if (colour[next] == white)
                push(next);
        }
    }
    return std::nullopt;
}

DismantlingTrace order_from_projection(const Graph& g, const DismantlingProjection& p)
{
    validate_projection(g, p, false);
    const std::size_t m = g.order();
    const ExposureRows rows = exposure_rows(g, p);
    Bits alive = g.all_bits();

    DismantlingTrace trace;
    std::vector<Vertex> witness;
    for (std::size_t step = 0; step + 1 < m; ++step) {
        std::optional<std::size_t> chosen;
        std::size_t pair_index = 0;
        // Rows are keyed by id, so the first hit is the lowest exposed id.
        for (std::size_t k = 0; k < rows.rho.size() && !chosen; ++k) {
            if (!alive.test(rows.rho[k]))
                continue;
            if (auto i = exposing_pair(g, rows, k, alive)) {
                chosen = k;
                pair_index = *i;
            }
        }
        if (!chosen)
            throw Error(ErrorKind::precondition, "no exposed vertex in " + g.to_set(alive).to_string());
        trace.order.push_back(g.id(rows.rho[*chosen]));
        witness.push_back(rows.first_member[*chosen][pair_index]);
        alive.reset(rows.rho[*chosen]);
    }
    if (m > 0)
        trace.order.push_back(p.sigma);

    for (std::size_t i = 1; i + 1 < m; ++i)
        for (std::size_t j = i; j + 1 < m; ++j)
            if (witness[j] == trace.order[i - 1])
                witness[j] = witness[i - 1];
    trace.witnesses = std::move(witness);

    if (!verify_trace(g, trace))
        throw Error(ErrorKind::internal, "order_from_projection produced an invalid trace");
    return trace;
}

bool is_pi_convex(const Graph& g, const DismantlingProjection& p, const VertexSet& r)
{
    for (Vertex rho : r) {
        if (!g.contains(rho))
            return false;
        if (rho == p.sigma)
            continue;
        auto it = p.table.find(rho);
        if (it == p.table.end())
            return false;
        for (const auto& pr : it->second)
            if (!r.contains(pr.first) && !r.contains(pr.second))
                return false;
    }
    return true;
}

DismantlingProjection restrict_projection(const Graph& g, const DismantlingProjection& p, const VertexSet& r)
{
    if (!is_pi_convex(g, p, r))
        throw Error(ErrorKind::precondition, "restrict_projection: set is not convex for the projection");
    if (!r.contains(p.sigma)) {
        // Walk pair members inside r; a convex set missing sigma must loop.
        std::vector<Vertex> chain;
        std::set<Vertex> seen;
        Vertex cur = r.front();
        while (seen.insert(cur).second) {
            chain.push_back(cur);
            const auto& pr = p.table.at(cur).front();
            cur = r.contains(pr.first) ? pr.first : pr.second;
        }
        chain.push_back(cur);
        std::string text;
        for (Vertex v : chain)
            text += (text.empty() ? "" : " -> ") + std::to_string(v);
        throw Error(ErrorKind::precondition,
                    "restrict_projection: convex set misses the base; Pi* cycle inside it: " + text);
    }
    DismantlingProjection out;
    out.sigma = p.sigma;
    for (Vertex rho : r) {
        if (rho == p.sigma)
            continue;
        PairSet pairs;
        for (const auto& pr : p.table.at(rho)) {
            const bool a = r.contains(pr.first);
            const bool b = r.contains(pr.second);
            pairs.emplace_back(a ? pr.first : pr.second, b ? pr.second : pr.first);
        }
        out.table.emplace(rho, normalized(std::move(pairs)));
    }
    return out;
}

VertexSet ProjectionFamily::bases() const
{
    std::vector<Vertex> out;
    for (const auto& [s, unused] : members)
        out.push_back(s);
    return VertexSet(std::move(out));
}

namespace {

PairSet image_of(const Permutation& h, const PairSet& pairs)
{
    PairSet out;
    out.reserve(pairs.size());
    for (const auto& pr : pairs)
        out.emplace_back(h(pr.first), h(pr.second));
    return normalized(std::move(out));
}

} // namespace

bool verify_equivariant(const Graph& g, const ProjectionFamily& fam, const PermutationGroup& h)
{
    const VertexSet bases = fam.bases();
    for (const auto& [s, proj] : fam.members) {
        if (proj.sigma != s)
            throw Error(ErrorKind::invalid_input, "family member indexed by " + std::to_string(s) +
                                                      " has base " + std::to_string(proj.sigma));
        validate_projection(g, proj, false);
    }
    if (!h.is_invariant(bases))
        throw Error(ErrorKind::precondition, "family base set " + bases.to_string() + " is not invariant");
    for (const auto& gen : h.generators()) {
        for (const auto& [s, proj] : fam.members) {
            const auto& target = fam.members.at(gen(s));
            if (target.table.size() != proj.table.size())
                return false;
            for (const auto& [rho, pairs] : proj.table) {
                auto it = target.table.find(gen(rho));
                if (it == target.table.end() || normalized(it->second) != image_of(gen, pairs))
                    return false;
            }
        }
    }
    return true;
}

ProjectionCliqueResult invariant_clique_via_projections(const Graph& g, const PermutationGroup& h,
                                                        const ProjectionFamily& fam, const VertexSet& r)
{
    if (!h.acts_on(g))
        throw Error(ErrorKind::precondition, "group does not act on the graph by automorphisms");
    if (fam.members.empty())
        throw Error(ErrorKind::invalid_input, "empty projection family");

    std::optional<FixedPointHypothesis> hypothesis;
    Vertex base = 0;
    if (h.is_invariant(r)) {
        for (const auto& [s, proj] : fam.members)
            if (is_pi_convex(g, proj, r)) {
                hypothesis = FixedPointHypothesis::invariant_set;
                base = s;
                break;
            }
    }
    std::string why = h.is_invariant(r) ? "the set is invariant but convex for no family member"
                                        : "the set " + r.to_string() + " is not invariant";
    if (!hypothesis) {
        for (const auto& [s, proj] : fam.members) {
            const VertexSet orbit = h.orbit(VertexSet{std::vector<Vertex>{s}});
            ProjectionFamily sub;
            bool usable = true;
            for (Vertex t : orbit) {
                auto it = fam.members.find(t);
                if (it == fam.members.end() || !is_pi_convex(g, it->second, r)) {
                    usable = false;
                    break;
                }
                sub.members.emplace(t, it->second);
            }
            if (!usable)
                continue;
            if (!verify_equivariant(g, sub, h)) {
                why += "; family over the orbit of " + std::to_string(s) + " is not equivariant";
                continue;
            }
            hypothesis = FixedPointHypothesis::equivariant_family;
            base = s;
            break;
        }
    }
    if (!hypothesis)
        throw Error(ErrorKind::hypothesis, "no fixed-point hypothesis holds: " + why +
                                               "; and no base orbit has an equivariant family with the set convex");

    ProjectionCliqueResult out;
    out.hypothesis = *hypothesis;
    out.base = base;
    out.orbit_set = h.orbit(r);
    const auto& proj = fam.members.at(base);
    if (!is_pi_convex(g, proj, out.orbit_set))
        throw Error(ErrorKind::internal, "orbit set " + out.orbit_set.to_string() + " is not convex");
    const DismantlingProjection restricted = restrict_projection(g, proj, out.orbit_set);
    const Graph sub = induced_subgraph(g, out.orbit_set);
    out.trace = order_from_projection(sub, restricted);
    out.clique = invariant_clique(sub, h.restricted_to(out.orbit_set)).clique;
    if (!verify_invariant_clique(g, h, out.clique))
        throw Error(ErrorKind::internal, "projection pipeline produced an unverified clique");
    return out;
}

namespace {

DismantlingProjection towards(const Graph& g, Vertex sigma)
{
    const DistanceMatrix dist(g);
    const std::size_t s = g.index_of(sigma);
    DismantlingProjection p;
    p.sigma = sigma;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (v == s)
            continue;
        if (dist(v, s) == unreachable)
            throw Error(ErrorKind::disconnected, "vertex " + std::to_string(g.id(v)) + " cannot reach the base");
        const auto path = least_geodesic(g, dist, g.id(v), sigma);
        p.table.emplace(g.id(v), PairSet{VertexPair(path[1], path[1])});
    }
    return p;
}

} // namespace

DismantlingProjection tree_power_projection(const Graph& tree, std::size_t d, Vertex sigma)
{
    if (!is_tree(tree))
        throw Error(ErrorKind::invalid_input, "tree_power_projection: input is not a tree");
    if (d == 0)
        throw Error(ErrorKind::invalid_input, "tree_power_projection: D must be at least 1");
    tree.index_of(sigma);
    return towards(tree, sigma);
}

DismantlingProjection geodesic_projection(const Graph& g, Vertex sigma)
{
    g.index_of(sigma);
    return towards(g, sigma);
}

const char* to_string(FixedPointHypothesis h)
{
    return h == FixedPointHypothesis::invariant_set ? "invariant_set" : "equivariant_family";
}

} // namespace dismantle
