#include "dismantle/dismantling.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace dismantle {

namespace {

std::optional<DismantlingTrace> greedy_order(const Graph& g, std::uint64_t seed)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(by_rank.begin(), by_rank.end(), rng);

    Bits alive = g.all_bits();
    DismantlingTrace trace;
    trace.order.reserve(n);
    trace.witnesses.reserve(n ? n - 1 : 0);

    for (std::size_t step = 0; step + 1 < n; ++step) {
        bool removed = false;
        for (std::size_t p : by_rank) {
            if (!alive.test(p))
                continue;
            const Bits doms = dominators_within(g, p, alive);
            if (doms.none())
                continue;
            auto witness = std::find_if(by_rank.begin(), by_rank.end(), [&](std::size_t q) { return doms.test(q); });
            trace.order.push_back(g.id(p));
            trace.witnesses.push_back(g.id(*witness));
            alive.reset(p);
            removed = true;
            break;
        }
        if (!removed)
            return std::nullopt;
    }
    if (n > 0)
        trace.order.push_back(g.id(alive.find_first()));
    return trace;
}

} // namespace

std::optional<DismantlingTrace> dismantling_order(const Graph& g, std::uint64_t seed)
{
    if (g.empty())
        throw Error(ErrorKind::invalid_input, "dismantling_order: empty graph");
    if (!is_connected(g))
        throw Error(ErrorKind::disconnected,
                    "dismantling_order: graph is disconnected (a disconnected graph is never dismantlable; "
                    "request per-component evaluation explicitly)");
    return greedy_order(g, seed);
}

std::vector<std::optional<DismantlingTrace>> dismantling_orders_by_component(const Graph& g, std::uint64_t seed)
{
    std::vector<std::optional<DismantlingTrace>> out;
    for (const auto& comp : connected_components(g))
        out.push_back(greedy_order(induced_subgraph(g, comp), seed));
    return out;
}

bool is_dismantlable(const Graph& g)
{
    return !g.empty() && is_connected(g) && greedy_order(g, 0).has_value();
}

std::optional<std::size_t> first_trace_violation(const Graph& g, const DismantlingTrace& t)
{
    const std::size_t m = g.order();
    if (t.order.size() != m)
        throw Error(ErrorKind::invalid_input, "trace order has " + std::to_string(t.order.size()) +
                                                  " entries, graph has " + std::to_string(m) + " vertices");
    if (t.witnesses.size() != (m == 0 ? 0 : m - 1))
        throw Error(ErrorKind::invalid_input, "trace needs exactly one witness per vertex except the last");
    std::vector<std::size_t> pos(m);
    Bits seen(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto p = g.find_index(t.order[i]);
        if (!p || seen.test(*p))
            throw Error(ErrorKind::invalid_input, "trace order is not a permutation of the vertex set");
        seen.set(*p);
        pos[i] = *p;
    }

    Bits suffix = g.all_bits();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        auto w = g.find_index(t.witnesses[i]);
        if (!w || *w == pos[i] || !suffix.test(*w))
            return i;
        const Bits mine = g.closed_row(pos[i]) & suffix;
        if (!mine.is_subset_of(g.closed_row(*w)))
            return i;
        suffix.reset(pos[i]);
    }
    return std::nullopt;
}

bool verify_trace(const Graph& g, const DismantlingTrace& t)
{
    return !first_trace_violation(g, t).has_value();
}

DismantlingTrace remove_and_reorder(const Graph& g, const DismantlingTrace& t, Vertex sigma)
{
    if (!verify_trace(g, t))
        throw Error(ErrorKind::precondition, "remove_and_reorder: input trace is not a valid dismantling order");
    const VertexSet doms = dominators(g, sigma);
    if (doms.empty())
        throw Error(ErrorKind::precondition, "remove_and_reorder: vertex " + std::to_string(sigma) + " is not dominated");

    const std::size_t m = t.order.size();
    std::map<Vertex, std::size_t> slot;
    for (std::size_t i = 0; i < m; ++i)
        slot[t.order[i]] = i;
    // f[i]: slot of the witness of the vertex in slot i.
    std::vector<std::size_t> f(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
        f[i] = slot.at(t.witnesses[i]);

    const std::size_t j = slot.at(sigma);
    // chain[i] is the slot of a vertex dominating sigma within the suffix from slot i.
    std::vector<std::size_t> chain(j + 1);
    chain[0] = slot.at(doms.front());
    std::optional<std::size_t> l;
    for (std::size_t i = 1; i <= j; ++i) {
        chain[i] = chain[i - 1] != i - 1 ? chain[i - 1] : f[chain[i - 1]];
        if (chain[i] == j && !l)
            l = i - 1;
    }

    auto early_witness = [&](std::size_t i) {
        return t.order[f[i] != j ? f[i] : chain[i]];
    };

    DismantlingTrace out;
    if (!l) {
        for (std::size_t i = 0; i < m; ++i) {
            if (i == j)
                continue;
            out.order.push_back(t.order[i]);
            if (i + 1 < m)
                out.witnesses.push_back(early_witness(i));
        }
    } else {
        // The suffix from slot l minus sigma is the suffix from l+1 with
        // sigma renamed to order[l]; reuse its witnesses through that renaming.
        const std::size_t moved = *l;
        auto renamed = [&](std::size_t s) { return s == j ? t.order[moved] : t.order[s]; };
        for (std::size_t i = 0; i < m; ++i) {
            if (i == moved)
                continue;
            const bool last = i + 1 == m;
            if (i < moved) {
                out.order.push_back(t.order[i]);
                out.witnesses.push_back(early_witness(i));
            } else if (i == j) {
                out.order.push_back(t.order[moved]);
                if (!last)
                    out.witnesses.push_back(renamed(f[i]));
            } else {
                out.order.push_back(t.order[i]);
                if (!last)
                    out.witnesses.push_back(renamed(f[i]));
            }
        }
    }

    VertexSet rest = g.vertex_set();
    rest.erase(sigma);
    if (!verify_trace(induced_subgraph(g, rest), out))
        throw Error(ErrorKind::internal, "remove_and_reorder produced an invalid trace");
    return out;
}

namespace {

bool component_copwin(const Graph& g)
{
    const std::size_t n = g.order();
    if (n <= 1)
        return true;
    // cop_wins[c*n+r]: cop to move wins; robber_lost[c*n+r]: robber to move loses.
    std::vector<char> cop_wins(n * n, 0);
    std::vector<char> robber_lost(n * n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        cop_wins[v * n + v] = 1;
        robber_lost[v * n + v] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t s = c * n + r;
                if (!cop_wins[s]) {
                    for (std::size_t c2 = 0; c2 < n; ++c2) {
                        if ((c2 == c || g.adjacent_at(c, c2)) && robber_lost[c2 * n + r]) {
                            cop_wins[s] = 1;
                            changed = true;
                            break;
                        }
                    }
                }
                if (!robber_lost[s]) {
                    bool all = true;
                    for (std::size_t r2 = 0; r2 < n && all; ++r2)
                        if ((r2 == r || g.adjacent_at(r, r2)) && !cop_wins[c * n + r2])
                            all = false;
                    if (all) {
                        robber_lost[s] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        bool wins_everywhere = true;
        for (std::size_t r = 0; r < n && wins_everywhere; ++r)
            wins_everywhere = cop_wins[c * n + r] != 0;
        if (wins_everywhere)
            return true;
    }
    return false;
}

} // namespace

bool copwin_oracle(const Graph& g)
{
    for (const auto& comp : connected_components(g))
        if (!component_copwin(induced_subgraph(g, comp)))
            return false;
    return true;
}

Graph random_dismantlable(std::size_t n, std::size_t extra_edges, std::uint64_t seed)
{
    if (n == 0)
        throw Error(ErrorKind::invalid_input, "random_dismantlable: n must be at least 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::size_t> parent(n, 0);

    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t p = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        parent[v] = p;
        adj[v][p] = adj[p][v] = 1;
        for (std::size_t u = 0; u < v; ++u)
            if (u != p && adj[p][u] && coin(rng))
                adj[v][u] = adj[u][v] = 1;
    }

    // Edge {a,b} with b < a keeps N(a) ⊆ N(parent a) inside {0..a} iff b ∈ N(parent a).
    for (std::size_t added = 0; added < extra_edges; ++added) {
        std::vector<Edge> candidates;
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (!adj[a][b] && (b == parent[a] || adj[parent[a]][b]))
                    candidates.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        if (candidates.empty())
            break;
        const auto& [a, b] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }

    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (adj[a][b])
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    Graph g(std::move(ids), edges);

    DismantlingTrace recorded;
    for (std::size_t v = n; v-- > 0;) {
        recorded.order.push_back(static_cast<Vertex>(v));
        if (v > 0)
            recorded.witnesses.push_back(static_cast<Vertex>(parent[v]));
    }
    if (!verify_trace(g, recorded) || !dismantling_order(g, seed))
        throw Error(ErrorKind::internal, "random_dismantlable produced a non-dismantlable graph");
    return g;
}

} // namespace dismantle
