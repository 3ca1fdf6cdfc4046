#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dismantle/graph.hpp"

namespace dismantle {

inline constexpr std::int32_t unreachable = -1;

/// All-pairs hop distances by breadth-first search, indexed by position.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    std::size_t size() const { return n_; }
    std::int32_t at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    std::int32_t operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    /// Largest finite distance; unreachable when disconnected.
    std::int32_t diameter() const;

private:
    std::size_t n_ = 0;
    std::vector<std::int32_t> d_;
};

/// {v : min over c of d(v, c) <= radius}. Throws on empty `centre`.
VertexSet ball(const Graph& g, const VertexSet& centre, std::size_t radius);
VertexSet ball(const Graph& g, const DistanceMatrix& dist, const VertexSet& centre, std::size_t radius);

/// Same vertices; u ~ v iff 1 <= d(u, v) <= d. Throws for d == 0.
Graph rips_power_graph(const Graph& g, std::size_t d);
Graph rips_power_graph(const Graph& g, const DistanceMatrix& dist, std::size_t d);

/// Distance from v to the nearest member of `set`.
std::int32_t distance_to_set(const Graph& g, const DistanceMatrix& dist, Vertex v, const VertexSet& set);

/// Max pairwise distance inside `set` (0 for a singleton).
std::int32_t set_diameter(const Graph& g, const DistanceMatrix& dist, const VertexSet& set);

/// Lexicographically least geodesic from `from` to `to`, as vertex ids.
std::vector<Vertex> least_geodesic(const Graph& g, const DistanceMatrix& dist, Vertex from, Vertex to);

} // namespace dismantle
