#include "dismantle/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace dismantle {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_, unreachable)
{
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n_; ++s) {
        std::int32_t* row = &d_[s * n_];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            const Bits& nb = g.closed_row(v);
            for (std::size_t w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
                if (row[w] == unreachable) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

std::int32_t DistanceMatrix::diameter() const
{
    std::int32_t best = 0;
    for (std::int32_t x : d_) {
        if (x == unreachable)
            return unreachable;
        best = std::max(best, x);
    }
    return best;
}

VertexSet ball(const Graph& g, const DistanceMatrix& dist, const VertexSet& centre, std::size_t radius)
{
    if (centre.empty())
        throw Error(ErrorKind::invalid_input, "ball: empty centre set");
    std::vector<std::size_t> cpos;
    for (Vertex c : centre)
        cpos.push_back(g.index_of(c));
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        for (std::size_t c : cpos) {
            const auto d = dist(v, c);
            if (d != unreachable && static_cast<std::size_t>(d) <= radius) {
                out.push_back(g.id(v));
                break;
            }
        }
    }
    return VertexSet(std::move(out));
}

VertexSet ball(const Graph& g, const VertexSet& centre, std::size_t radius)
{
    return ball(g, DistanceMatrix(g), centre, radius);
}

Graph rips_power_graph(const Graph& g, const DistanceMatrix& dist, std::size_t d)
{
    if (d == 0)
        throw Error(ErrorKind::invalid_input, "rips_power_graph: D must be at least 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j) {
            const auto x = dist(i, j);
            if (x != unreachable && static_cast<std::size_t>(x) <= d)
                edges.emplace_back(g.id(i), g.id(j));
        }
    return Graph(g.vertices(), edges);
}

Graph rips_power_graph(const Graph& g, std::size_t d)
{
    return rips_power_graph(g, DistanceMatrix(g), d);
}

std::int32_t distance_to_set(const Graph& g, const DistanceMatrix& dist, Vertex v, const VertexSet& set)
{
    const std::size_t pv = g.index_of(v);
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (Vertex c : set) {
        const auto x = dist(pv, g.index_of(c));
        if (x != unreachable)
            best = std::min(best, x);
    }
    return best == std::numeric_limits<std::int32_t>::max() ? unreachable : best;
}

std::int32_t set_diameter(const Graph& g, const DistanceMatrix& dist, const VertexSet& set)
{
    std::int32_t best = 0;
    for (Vertex a : set)
        for (Vertex b : set) {
            const auto x = dist(g.index_of(a), g.index_of(b));
            if (x == unreachable)
                return unreachable;
            best = std::max(best, x);
        }
    return best;
}

std::vector<Vertex> least_geodesic(const Graph& g, const DistanceMatrix& dist, Vertex from, Vertex to)
{
    std::size_t cur = g.index_of(from);
    const std::size_t target = g.index_of(to);
    if (dist(cur, target) == unreachable)
        throw Error(ErrorKind::disconnected,
                    "no path between " + std::to_string(from) + " and " + std::to_string(to));
    std::vector<Vertex> path{g.id(cur)};
    // Positions are sorted by id, so the first qualifying neighbour is the least.
    while (cur != target) {
        const Bits& nb = g.closed_row(cur);
        for (std::size_t w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
            if (w != cur && dist(w, target) == dist(cur, target) - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(g.id(cur));
    }
    return path;
}

} // namespace dismantle
