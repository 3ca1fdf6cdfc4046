#include "dismantle/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace dismantle {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::unknown_vertex: return "unknown_vertex";
    case ErrorKind::not_dismantlable: return "not_dismantlable";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::counterexample: return "counterexample";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> items)
    : VertexSet(std::vector<Vertex>(items))
{
}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(Vertex v)
{
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v)
        items_.insert(it, v);
}

void VertexSet::erase(Vertex v)
{
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v)
        items_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const
{
    VertexSet out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const
{
    VertexSet out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out.items_));
    return out;
}

VertexSet VertexSet::without(const VertexSet& other) const
{
    VertexSet out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
    return out;
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i)
        out += (i ? ", " : "") + std::to_string(items_[i]);
    return out + "}";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) : ids_(std::move(vertices))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw Error(ErrorKind::invalid_input, "duplicate vertex id");
    if (!ids_.empty() && ids_.front() < 0)
        throw Error(ErrorKind::invalid_input, "vertex ids must be nonnegative");

    const std::size_t n = ids_.size();
    closed_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        closed_[i].set(i);

    for (const auto& [a, b] : edges) {
        if (a == b)
            throw Error(ErrorKind::invalid_input, "loop at vertex " + std::to_string(a));
        auto ia = find_index(a);
        auto ib = find_index(b);
        if (!ia || !ib)
            throw Error(ErrorKind::invalid_input,
                        "edge {" + std::to_string(a) + "," + std::to_string(b) + "} has an unlisted endpoint");
        if (closed_[*ia].test(*ib))
            throw Error(ErrorKind::invalid_input,
                        "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        closed_[*ia].set(*ib);
        closed_[*ib].set(*ia);
    }
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : closed_)
        twice += row.count() - 1;
    return twice / 2;
}

std::optional<std::size_t> Graph::find_index(Vertex v) const
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::index_of(Vertex v) const
{
    auto i = find_index(v);
    if (!i)
        throw Error(ErrorKind::unknown_vertex, "unknown vertex " + std::to_string(v));
    return *i;
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    return adjacent_at(index_of(a), index_of(b));
}

std::size_t Graph::degree(Vertex v) const
{
    return closed_[index_of(v)].count() - 1;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (std::size_t j = closed_[i].find_next(i); j != Bits::npos; j = closed_[i].find_next(j))
            out.emplace_back(ids_[i], ids_[j]);
    return out;
}

Bits Graph::to_bits(const VertexSet& s) const
{
    Bits bits(order());
    for (Vertex v : s)
        bits.set(index_of(v));
    return bits;
}

VertexSet Graph::to_set(const Bits& bits) const
{
    std::vector<Vertex> out;
    for (std::size_t i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
        out.push_back(ids_[i]);
    return VertexSet(std::move(out));
}

Bits Graph::all_bits() const
{
    Bits bits(order());
    bits.set();
    return bits;
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.ids_ == b.ids_ && a.closed_ == b.closed_;
}

// --------------------------------------------------------------- operations

VertexSet closed_neighborhood(const Graph& g, Vertex v)
{
    return g.to_set(g.closed_row(g.index_of(v)));
}

Bits dominators_within(const Graph& g, std::size_t position, const Bits& alive)
{
    Bits out(g.order());
    const Bits mine = g.closed_row(position) & alive;
    // A dominator lies in N(rho), so only neighbours need testing.
    for (std::size_t j = mine.find_first(); j != Bits::npos; j = mine.find_next(j)) {
        if (j != position && mine.is_subset_of(g.closed_row(j)))
            out.set(j);
    }
    return out;
}

VertexSet dominators(const Graph& g, Vertex rho)
{
    return g.to_set(dominators_within(g, g.index_of(rho), g.all_bits()));
}

bool is_dominated(const Graph& g, Vertex rho)
{
    return dominators_within(g, g.index_of(rho), g.all_bits()).any();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<std::size_t> positions;
    positions.reserve(s.size());
    for (Vertex v : s) {
        auto i = g.find_index(v);
        if (!i)
            throw Error(ErrorKind::unknown_vertex, "induced_subgraph: vertex " + std::to_string(v) + " not in graph");
        positions.push_back(*i);
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < positions.size(); ++a)
        for (std::size_t b = a + 1; b < positions.size(); ++b)
            if (g.adjacent_at(positions[a], positions[b]))
                edges.emplace_back(g.id(positions[a]), g.id(positions[b]));
    return Graph(s.items(), edges);
}

VertexSet Quotient::representatives() const
{
    std::vector<Vertex> reps;
    reps.reserve(classes.size());
    for (const auto& c : classes)
        reps.push_back(c.front());
    return VertexSet(std::move(reps));
}

VertexSet Quotient::preimage(const VertexSet& classes_subset) const
{
    VertexSet out;
    for (Vertex c : classes_subset) {
        if (c < 0 || static_cast<std::size_t>(c) >= classes.size())
            throw Error(ErrorKind::unknown_vertex, "unknown class id " + std::to_string(c));
        out = out.united(classes[static_cast<std::size_t>(c)]);
    }
    return out;
}

Quotient equal_neighborhood_quotient(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::int64_t> cls(n, -1);
    Quotient q;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0)
            continue;
        const auto id = static_cast<Vertex>(q.classes.size());
        std::vector<Vertex> members;
        for (std::size_t j = i; j < n; ++j) {
            if (cls[j] < 0 && g.closed_row(j) == g.closed_row(i)) {
                cls[j] = id;
                members.push_back(g.id(j));
            }
        }
        q.classes.emplace_back(std::move(members));
    }
    for (std::size_t i = 0; i < n; ++i)
        q.class_of[g.id(i)] = cls[i];

    std::vector<Vertex> class_ids(q.classes.size());
    for (std::size_t c = 0; c < class_ids.size(); ++c)
        class_ids[c] = static_cast<Vertex>(c);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < q.classes.size(); ++a)
        for (std::size_t b = a + 1; b < q.classes.size(); ++b)
            if (g.adjacent(q.classes[a].front(), q.classes[b].front()))
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    q.graph = Graph(std::move(class_ids), edges);
    return q;
}

bool has_equal_neighborhoods(const Graph& g)
{
    std::set<Bits> seen;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (!seen.insert(g.closed_row(i)).second)
            return true;
    return false;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        return false;
    const Bits bits = g.to_bits(s);
    for (std::size_t i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
        if (!bits.is_subset_of(g.closed_row(i)))
            return false;
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            comp.push_back(g.id(v));
            const Bits& row = g.closed_row(v);
            for (std::size_t w = row.find_first(); w != Bits::npos; w = row.find_next(w)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g)
{
    return !g.empty() && g.edge_count() + 1 == g.order() && is_connected(g);
}

Graph relabeled(const Graph& g, const std::map<Vertex, Vertex>& relabel)
{
    std::vector<Vertex> ids;
    ids.reserve(g.order());
    for (Vertex v : g.vertices()) {
        auto it = relabel.find(v);
        if (it == relabel.end())
            throw Error(ErrorKind::unknown_vertex, "relabel map misses vertex " + std::to_string(v));
        ids.push_back(it->second);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        edges.emplace_back(relabel.at(a), relabel.at(b));
    return Graph(std::move(ids), edges);
}

} // namespace dismantle
