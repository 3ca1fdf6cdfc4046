#include "dismantle/hyperbolic.hpp"

#include <algorithm>
#include <limits>

#include "dismantle/projection.hpp"

namespace dismantle {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

void require_connected(const Graph& g, const char* who)
{
    if (g.empty())
        throw Error(ErrorKind::invalid_input, std::string(who) + ": empty graph");
    if (!is_connected(g))
        throw Error(ErrorKind::disconnected, std::string(who) + ": graph is disconnected");
}

std::vector<std::size_t> positions_by_distance(const DistanceMatrix& dist, std::size_t y)
{
    std::vector<std::size_t> order(dist.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist(a, y) < dist(b, y); });
    return order;
}

// best[s]: over geodesics from s to y, the largest possible min distance to t.
std::vector<std::int32_t> bottleneck_to(const Graph& g, const DistanceMatrix& dist, std::size_t t, std::size_t y,
                                        const std::vector<std::size_t>& by_distance)
{
    std::vector<std::int32_t> best(g.order(), 0);
    for (std::size_t s : by_distance) {
        if (s == y) {
            best[s] = dist(t, y);
            continue;
        }
        std::int32_t onward = 0;
        const Bits& nb = g.closed_row(s);
        for (std::size_t x = nb.find_first(); x != Bits::npos; x = nb.find_next(x))
            if (dist(x, y) == dist(s, y) - 1)
                onward = std::max(onward, best[x]);
        best[s] = std::min(dist(t, s), onward);
    }
    return best;
}

std::vector<Vertex> follow_best(const Graph& g, const DistanceMatrix& dist, std::size_t from, std::size_t y,
                                const std::vector<std::int32_t>& best)
{
    std::vector<Vertex> path{g.id(from)};
    std::size_t cur = from;
    while (cur != y) {
        std::size_t next = Bits::npos;
        const Bits& nb = g.closed_row(cur);
        for (std::size_t x = nb.find_first(); x != Bits::npos; x = nb.find_next(x))
            if (dist(x, y) == dist(cur, y) - 1 && (next == Bits::npos || best[x] > best[next]))
                next = x;
        cur = next;
        path.push_back(g.id(cur));
    }
    return path;
}

std::vector<Vertex> joined(std::vector<Vertex> a, const std::vector<Vertex>& b)
{
    a.insert(a.end(), b.begin() + 1, b.end());
    return a;
}

ThinTriangleWitness trivial_witness(const Graph& g)
{
    const Vertex x = g.id(0);
    return {x, x, x, x, {x}, {x}, {x}};
}

} // namespace

HyperbolicityReport hyperbolicity_delta(const Graph& g)
{
    require_connected(g, "hyperbolicity_delta");
    HyperbolicityReport report;
    report.witness = trivial_witness(g);
    const std::size_t n = g.order();
    if (is_tree(g)) {
        report.max_geodesics_per_pair = 1;
        return report;
    }
    const DistanceMatrix dist(g);

    std::vector<std::vector<std::size_t>> by_distance(n);
    for (std::size_t y = 0; y < n; ++y)
        by_distance[y] = positions_by_distance(dist, y);

    // far[(t*n + y)*n + x] = F(t, x, y)
    std::vector<std::int32_t> far(n * n * n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t y = 0; y < n; ++y) {
            const auto best = bottleneck_to(g, dist, t, y, by_distance[y]);
            std::copy(best.begin(), best.end(), far.begin() + static_cast<std::ptrdiff_t>((t * n + y) * n));
        }
    auto F = [&](std::size_t t, std::size_t x, std::size_t y) { return far[(t * n + y) * n + x]; };

    std::int32_t delta = 0;
    std::size_t bu = 0, bv = 0, bw = 0, bt = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v)
            for (std::size_t t = 0; t < n; ++t) {
                if (dist(u, t) + dist(t, v) != dist(u, v))
                    continue;
                for (std::size_t w = 0; w < n; ++w) {
                    const std::int32_t val = std::min(F(t, v, w), F(t, w, u));
                    if (val > delta) {
                        delta = val;
                        bu = u, bv = v, bw = w, bt = t;
                    }
                }
            }
    report.delta = static_cast<std::size_t>(delta);

    std::vector<std::uint64_t> count(n);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t s : by_distance[y]) {
            if (s == y) {
                count[s] = 1;
                continue;
            }
            count[s] = 0;
            const Bits& nb = g.closed_row(s);
            for (std::size_t x = nb.find_first(); x != Bits::npos; x = nb.find_next(x))
                if (dist(x, y) == dist(s, y) - 1)
                    count[s] = saturating_add(count[s], count[x]);
        }
        for (std::uint64_t c : count)
            report.max_geodesics_per_pair = std::max(report.max_geodesics_per_pair, c);
    }

    if (delta > 0) {
        auto& wt = report.witness;
        wt.u = g.id(bu), wt.v = g.id(bv), wt.w = g.id(bw), wt.t = g.id(bt);
        wt.uv = joined(least_geodesic(g, dist, wt.u, wt.t), least_geodesic(g, dist, wt.t, wt.v));
        wt.vw = follow_best(g, dist, bv, bw, bottleneck_to(g, dist, bt, bw, by_distance[bw]));
        wt.wu = follow_best(g, dist, bw, bu, bottleneck_to(g, dist, bt, bu, by_distance[bu]));
    }
    return report;
}

std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, const DistanceMatrix& dist, Vertex from,
                                                     Vertex to, std::size_t cap, bool& capped)
{
    capped = false;
    const std::size_t s = g.index_of(from);
    const std::size_t y = g.index_of(to);
    if (dist(s, y) == unreachable)
        throw Error(ErrorKind::disconnected, "no geodesic between disconnected vertices");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{from};
    auto dfs = [&](auto&& self, std::size_t cur) -> void {
        if (capped)
            return;
        if (cur == y) {
            if (out.size() >= cap) {
                capped = true;
                return;
            }
            out.push_back(path);
            return;
        }
        const Bits& nb = g.closed_row(cur);
        for (std::size_t x = nb.find_first(); x != Bits::npos; x = nb.find_next(x)) {
            if (dist(x, y) != dist(cur, y) - 1)
                continue;
            path.push_back(g.id(x));
            self(self, x);
            path.pop_back();
        }
    };
    dfs(dfs, s);
    return out;
}

HyperbolicityReport hyperbolicity_delta_by_enumeration(const Graph& g, std::size_t geodesic_cap, bool allow_lower_bound)
{
    require_connected(g, "hyperbolicity_delta_by_enumeration");
    if (geodesic_cap == 0)
        throw Error(ErrorKind::invalid_input, "geodesic cap must be positive");
    const std::size_t n = g.order();
    const DistanceMatrix dist(g);
    HyperbolicityReport report;
    report.witness = trivial_witness(g);

    // Geodesics stored as positions.
    std::vector<std::vector<std::vector<std::size_t>>> geo(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            bool capped = false;
            for (const auto& path : enumerate_geodesics(g, dist, g.id(x), g.id(y), geodesic_cap, capped)) {
                std::vector<std::size_t> p;
                for (Vertex v : path)
                    p.push_back(g.index_of(v));
                geo[x * n + y].push_back(std::move(p));
            }
            report.max_geodesics_per_pair =
                std::max<std::uint64_t>(report.max_geodesics_per_pair, geo[x * n + y].size());
            if (capped)
                ++report.capped_pairs;
        }
    if (report.capped_pairs > 0) {
        if (!allow_lower_bound)
            throw Error(ErrorKind::cap_exceeded, std::to_string(report.capped_pairs) +
                                                     " vertex pairs have more than " + std::to_string(geodesic_cap) +
                                                     " geodesics");
        report.exact = false;
    }

    auto to_path = [&](const std::vector<std::size_t>& p) {
        std::vector<Vertex> out;
        for (std::size_t i : p)
            out.push_back(g.id(i));
        return out;
    };
    // Largest distance from t to a listed geodesic of (x, y), and which one.
    auto farthest = [&](std::size_t t, std::size_t x, std::size_t y) {
        std::int32_t best = -1;
        std::size_t which = 0;
        const auto& list = geo[x * n + y];
        for (std::size_t k = 0; k < list.size(); ++k) {
            std::int32_t near = std::numeric_limits<std::int32_t>::max();
            for (std::size_t s : list[k])
                near = std::min(near, dist(t, s));
            if (near > best) {
                best = near;
                which = k;
            }
        }
        return std::pair{best, which};
    };

    std::int32_t delta = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                for (const auto& side : geo[u * n + v])
                    for (std::size_t t : side) {
                        const auto [a, ka] = farthest(t, v, w);
                        const auto [b, kb] = farthest(t, w, u);
                        if (std::min(a, b) > delta) {
                            delta = std::min(a, b);
                            auto& wt = report.witness;
                            wt = {g.id(u), g.id(v), g.id(w), g.id(t), to_path(side),
                                  to_path(geo[v * n + w][ka]), to_path(geo[w * n + u][kb])};
                        }
                    }
    report.delta = static_cast<std::size_t>(delta);
    return report;
}

QuasiCentre quasi_centre(const Graph& g, const VertexSet& o)
{
    if (o.empty())
        throw Error(ErrorKind::invalid_input, "quasi_centre: empty set");
    require_connected(g, "quasi_centre");
    const DistanceMatrix dist(g);
    std::vector<std::size_t> opos;
    for (Vertex x : o)
        opos.push_back(g.index_of(x));
    QuasiCentre out;
    out.radius = std::numeric_limits<std::size_t>::max();
    std::vector<Vertex> centre;
    for (std::size_t v = 0; v < g.order(); ++v) {
        std::size_t ecc = 0;
        for (std::size_t x : opos)
            ecc = std::max(ecc, static_cast<std::size_t>(dist(v, x)));
        if (ecc < out.radius) {
            out.radius = ecc;
            centre.clear();
        }
        if (ecc == out.radius)
            centre.push_back(g.id(v));
    }
    out.centre = VertexSet(std::move(centre));
    return out;
}

namespace {

struct Validated {
    DistanceMatrix dist;
    std::int32_t centre_diameter = 0;
};

Validated validate(const Graph& g, std::size_t delta, std::size_t d, const VertexSet& c,
                   const HyperbolicOptions& options, const char* who)
{
    require_connected(g, who);
    if (c.empty())
        throw Error(ErrorKind::invalid_input, std::string(who) + ": empty centre set");
    for (Vertex x : c)
        g.index_of(x);
    if (d == 0)
        throw Error(ErrorKind::precondition, std::string(who) + ": D must be at least 1");
    if (delta >= 1 && d < 8 * delta + 1)
        throw Error(ErrorKind::precondition, std::string(who) + ": need D >= 8*delta+1 = " +
                                                 std::to_string(8 * delta + 1) + ", got D = " + std::to_string(d));
    const std::size_t exact = hyperbolicity_delta(g).delta;
    if (delta != exact && !(options.allow_delta_above && delta > exact))
        throw Error(ErrorKind::precondition, std::string(who) + ": delta = " + std::to_string(delta) +
                                                 " but the graph's hyperbolicity is " + std::to_string(exact));
    Validated out{DistanceMatrix(g), 0};
    out.centre_diameter = set_diameter(g, out.dist, c);
    if (static_cast<std::size_t>(out.centre_diameter) > 4 * delta + 1)
        throw Error(ErrorKind::precondition, std::string(who) + ": centre set has diameter " +
                                                 std::to_string(out.centre_diameter) + " > 4*delta+1");
    return out;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::counterexample, "claim check failed: " + what);
}

std::string num(std::int64_t x)
{
    return std::to_string(x);
}

ClaimReport check_claim(const Graph& g, const DistanceMatrix& dist, std::size_t delta_u, std::size_t d_u,
                        const VertexSet& c, std::int32_t diam_c, Vertex v)
{
    const auto delta = static_cast<std::int32_t>(delta_u);
    const auto D = static_cast<std::int32_t>(d_u);
    ClaimReport rep;
    rep.v = v;
    rep.centre_diameter = diam_c;
    const std::int32_t a = distance_to_set(g, dist, v, c);
    if (a < 2 * delta)
        throw Error(ErrorKind::precondition, "claim needs d(v, C) >= 2*delta; vertex " + std::to_string(v) +
                                                 " is at distance " + num(a));
    rep.a = static_cast<std::size_t>(a);
    const std::size_t pv = g.index_of(v);
    for (Vertex x : c)
        if (dist(pv, g.index_of(x)) == a) {
            rep.w = x;
            break;
        }
    rep.geodesic_vw = least_geodesic(g, dist, v, rep.w);
    rep.u = rep.geodesic_vw[static_cast<std::size_t>(2 * delta)];
    const std::size_t pu = g.index_of(rep.u);
    const std::size_t pw = g.index_of(rep.w);
    const VertexSet region = ball(g, dist, c, rep.a);
    rep.ball_size = region.size();

    for (Vertex t : region) {
        const std::size_t pt = g.index_of(t);
        if (pt == pv || dist(pt, pv) > D)
            continue;
        ClaimNeighbour nb;
        nb.t = t;
        nb.d_tv = dist(pt, pv);
        nb.d_tu = dist(pt, pu);
        require(nb.d_tu <= D, "d(" + num(t) + ", u) = " + num(nb.d_tu) + " > D; u does not dominate v");

        // Closest vertex of a path to u, earliest on ties.
        auto nearest = [&](const std::vector<Vertex>& path) {
            Vertex best = path.front();
            for (Vertex x : path)
                if (dist(g.index_of(x), pu) < dist(g.index_of(best), pu))
                    best = x;
            return best;
        };
        const auto wt = least_geodesic(g, dist, rep.w, t);
        const auto tv = least_geodesic(g, dist, t, v);
        const Vertex on_wt = nearest(wt);
        const Vertex on_tv = nearest(tv);
        if (dist(g.index_of(on_wt), pu) <= delta) {
            nb.proof_case = 1;
            nb.u_prime = on_wt;
        } else if (dist(g.index_of(on_tv), pu) <= delta) {
            nb.proof_case = 2;
            nb.u_prime = on_tv;
        } else {
            require(false, "no vertex of the geodesics wt, tv within delta of u for t = " + num(t));
        }
        const std::size_t pp = g.index_of(nb.u_prime);
        nb.d_tu_prime = dist(pt, pp);
        nb.d_uu_prime = dist(pu, pp);
        const std::int32_t d_uv = 2 * delta;

        if (nb.proof_case == 1) {
            const std::int32_t d_tw = dist(pt, pw);
            const std::int32_t d_pw = dist(pp, pw);
            require(nb.d_tu_prime + d_pw == d_tw && d_tw <= diam_c + a, "case 1 triangle bound at t = " + num(t));
            nb.chain.push_back("d(t,u') + d(u',w) = " + num(nb.d_tu_prime) + " + " + num(d_pw) + " = d(t,w) = " +
                               num(d_tw) + " <= diam(C) + a = " + num(diam_c + a));
            require(nb.d_tu_prime <= d_uv + diam_c + delta, "case 1 bound on d(t,u') at t = " + num(t));
            nb.chain.push_back("d(t,u') = " + num(nb.d_tu_prime) + " <= d(u,v) + diam(C) + delta = " +
                               num(d_uv + diam_c + delta));
            nb.bound = 8 * delta + 1;
            const std::int32_t mid = nb.d_tu_prime + nb.d_uu_prime;
            const std::int32_t top = d_uv + diam_c + 2 * delta;
            require(nb.d_tu <= mid && mid <= top && top <= nb.bound && nb.bound <= D,
                    "case 1 chain at t = " + num(t));
            nb.chain.push_back("d(t,u) = " + num(nb.d_tu) + " <= d(t,u') + d(u',u) = " + num(mid) +
                               " <= d(u,v) + diam(C) + 2delta = " + num(top) + " <= 8delta+1 = " + num(nb.bound) +
                               " <= D = " + num(D));
        } else {
            const std::int32_t d_vp = dist(pv, pp);
            require(d_vp >= d_uv - nb.d_uu_prime && d_uv - nb.d_uu_prime >= delta,
                    "case 2 bound on d(v,u') at t = " + num(t));
            nb.chain.push_back("d(v,u') = " + num(d_vp) + " >= d(v,u) - d(u,u') = " + num(d_uv - nb.d_uu_prime) +
                               " >= delta = " + num(delta));
            require(nb.d_tu_prime == nb.d_tv - d_vp && nb.d_tv - d_vp <= D - delta,
                    "case 2 bound on d(t,u') at t = " + num(t));
            nb.chain.push_back("d(t,u') = " + num(nb.d_tu_prime) + " = d(t,v) - d(v,u') = " + num(nb.d_tv - d_vp) +
                               " <= D - delta = " + num(D - delta));
            nb.bound = D;
            const std::int32_t mid = nb.d_tu_prime + nb.d_uu_prime;
            require(nb.d_tu <= mid && mid <= D, "case 2 chain at t = " + num(t));
            nb.chain.push_back("d(t,u) = " + num(nb.d_tu) + " <= d(t,u') + d(u',u) = " + num(mid) +
                               " <= (D - delta) + delta = " + num(D));
        }
        rep.neighbours.push_back(std::move(nb));
    }
    return rep;
}

} // namespace

ClaimReport lemma101_claim_check(const Graph& g, std::size_t delta, std::size_t d, const VertexSet& c, Vertex v,
                                 const HyperbolicOptions& options)
{
    if (delta == 0)
        throw Error(ErrorKind::precondition, "lemma101_claim_check: the claim needs delta >= 1");
    const Validated val = validate(g, delta, d, c, options, "lemma101_claim_check");
    g.index_of(v);
    return check_claim(g, val.dist, delta, d, c, val.centre_diameter, v);
}

RipsBallResult rips_ball_order(const Graph& g, std::size_t delta, std::size_t d, const VertexSet& c, std::size_t r,
                               const HyperbolicOptions& options)
{
    const Validated val = validate(g, delta, d, c, options, "rips_ball_order");
    const DistanceMatrix& dist = val.dist;
    RipsBallResult out;
    out.ball = ball(g, dist, c, r);
    const Graph power = rips_power_graph(g, dist, d);
    const Graph sub = induced_subgraph(power, out.ball);

    auto finish_with_clique = [&](const VertexSet& rest) {
        if (!is_clique(sub, rest))
            throw Error(ErrorKind::counterexample, "inner ball " + rest.to_string() + " does not span a simplex");
        for (Vertex x : rest) {
            out.trace.order.push_back(x);
            if (x != rest.back())
                out.trace.witnesses.push_back(rest.back());
        }
    };

    if (delta == 0) {
        const Vertex sigma = c.front();
        const bool tree = is_tree(g);
        out.branch = tree ? RipsBranch::tree_projection : RipsBranch::geodesic_projection;
        const DismantlingProjection proj = tree ? tree_power_projection(g, d, sigma) : geodesic_projection(g, sigma);
        out.trace = order_from_projection(sub, restrict_projection(power, proj, out.ball));
    } else if (r < 2 * delta) {
        out.branch = RipsBranch::clique;
        finish_with_clique(out.ball);
    } else {
        out.branch = RipsBranch::claim;
        std::vector<Vertex> rest;
        for (std::size_t a = r + 1; a-- > 2 * delta;) {
            for (Vertex v : out.ball) {
                if (static_cast<std::size_t>(distance_to_set(g, dist, v, c)) != a)
                    continue;
                ClaimReport rep = check_claim(g, dist, delta, d, c, val.centre_diameter, v);
                out.trace.order.push_back(v);
                out.trace.witnesses.push_back(rep.u);
                out.claims.push_back(std::move(rep));
            }
        }
        for (Vertex v : out.ball)
            if (static_cast<std::size_t>(distance_to_set(g, dist, v, c)) < 2 * delta)
                rest.push_back(v);
        finish_with_clique(VertexSet(std::move(rest)));
    }
    if (!verify_trace(sub, out.trace))
        throw Error(ErrorKind::counterexample, "rips_ball_order: produced trace is not a dismantling order");
    return out;
}

InvariantSubgraph invariant_subgraph_for(const Graph& g, const PermutationGroup& h, const VertexSet& s, std::size_t d)
{
    require_connected(g, "invariant_subgraph_for");
    if (!h.acts_on(g))
        throw Error(ErrorKind::precondition, "invariant_subgraph_for: group does not act on the graph");
    if (s.empty())
        throw Error(ErrorKind::invalid_input, "invariant_subgraph_for: empty set");
    InvariantSubgraph out;
    out.delta = hyperbolicity_delta(g).delta;
    if (d < 8 * out.delta + 1)
        throw Error(ErrorKind::precondition, "invariant_subgraph_for: need D >= 8*delta+1 = " +
                                                 std::to_string(8 * out.delta + 1));
    out.orbit = h.orbit(s);
    out.centre = quasi_centre(g, out.orbit);
    const DistanceMatrix dist(g);
    for (Vertex x : s)
        out.r = std::max(out.r, static_cast<std::size_t>(distance_to_set(g, dist, x, out.centre.centre)));
    out.vertices = ball(g, dist, out.centre.centre, out.r);
    if (!h.is_invariant(out.vertices) || !s.is_subset_of(out.vertices))
        throw Error(ErrorKind::internal, "ball around the quasi-centre is not an invariant superset");
    out.order = rips_ball_order(g, out.delta, d, out.centre.centre, out.r);
    return out;
}

const char* to_string(RipsBranch b)
{
    switch (b) {
    case RipsBranch::clique: return "clique";
    case RipsBranch::claim: return "claim";
    case RipsBranch::tree_projection: return "tree_projection";
    case RipsBranch::geodesic_projection: return "geodesic_projection";
    }
    return "?";
}

} // namespace dismantle
