#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dismantle/error.hpp"

namespace dismantle {

/// Opaque nonnegative vertex identifier. Ids survive induced subgraphs.
using Vertex = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bitset indexed by vertex *position* inside one particular Graph.
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> items);
    explicit VertexSet(std::vector<Vertex> items);

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex front() const { return items_.front(); }
    Vertex back() const { return items_.back(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex>& items() const { return items_; }

    bool is_subset_of(const VertexSet& other) const;
    VertexSet united(const VertexSet& other) const;
    VertexSet intersected(const VertexSet& other) const;
    VertexSet without(const VertexSet& other) const;

    /// "{1, 2, 5}"
    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

private:
    std::vector<Vertex> items_;
};

/// Finite simple undirected graph. Immutable after construction.
///
/// Vertices are stored sorted by id; every vertex has a position in
/// [0, order()) and the closed neighbourhood of each position is kept as a
/// bitset so that domination tests are a handful of word operations.
class Graph {
public:
    Graph() = default;

    /// Throws Error(invalid_input) on loops, duplicate vertices, or edges
    /// whose endpoints are not listed. Duplicate edges are rejected as well.
    Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    std::size_t order() const { return ids_.size(); }
    std::size_t edge_count() const;
    bool empty() const { return ids_.empty(); }

    const std::vector<Vertex>& vertices() const { return ids_; }
    VertexSet vertex_set() const { return VertexSet(ids_); }

    bool contains(Vertex v) const { return find_index(v).has_value(); }
    std::optional<std::size_t> find_index(Vertex v) const;
    /// Throws Error(unknown_vertex).
    std::size_t index_of(Vertex v) const;
    Vertex id(std::size_t position) const { return ids_[position]; }

    bool adjacent(Vertex a, Vertex b) const;
    bool adjacent_at(std::size_t i, std::size_t j) const { return i != j && closed_[i].test(j); }

    /// Closed neighbourhood of the vertex at `position`, as positions.
    const Bits& closed_row(std::size_t position) const { return closed_[position]; }
    std::size_t degree(Vertex v) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    Bits to_bits(const VertexSet& s) const;
    VertexSet to_set(const Bits& bits) const;
    Bits all_bits() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Vertex> ids_;
    std::vector<Bits> closed_;
};

/// N(v): v together with all of its neighbours.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// All pi != rho with N(rho) ⊆ N(pi). Equality of neighbourhoods counts.
VertexSet dominators(const Graph& g, Vertex rho);
bool is_dominated(const Graph& g, Vertex rho);

/// Dominators of the vertex at `position` inside the subgraph induced on `alive`.
Bits dominators_within(const Graph& g, std::size_t position, const Bits& alive);

Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Result of identifying vertices with equal closed neighbourhoods.
struct Quotient {
    Graph graph;                       // vertices are class ids 0..k-1
    std::map<Vertex, Vertex> class_of; // original vertex -> class id
    std::vector<VertexSet> classes;    // class id -> members

    /// Smallest member of each class, in class-id order.
    VertexSet representatives() const;
    VertexSet preimage(const VertexSet& classes_subset) const;
};

/// Class ids are assigned in order of each class's smallest member.
Quotient equal_neighborhood_quotient(const Graph& g);
bool has_equal_neighborhoods(const Graph& g);

/// Nonempty and pairwise adjacent.
bool is_clique(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_tree(const Graph& g);

/// Relabel vertices through `relabel` (must be injective on the vertex set).
Graph relabeled(const Graph& g, const std::map<Vertex, Vertex>& relabel);

} // namespace dismantle
