#include "dismantle/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace dismantle {

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Vertex> domain, std::vector<Vertex> images)
{
    if (domain.size() != images.size())
        throw Error(ErrorKind::invalid_input, "permutation: domain and image lengths differ");
    std::vector<std::size_t> idx(domain.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
    domain_.reserve(domain.size());
    images_.reserve(domain.size());
    for (std::size_t i : idx) {
        domain_.push_back(domain[i]);
        images_.push_back(images[i]);
    }
    if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
        throw Error(ErrorKind::invalid_input, "permutation: repeated domain element");
    std::vector<Vertex> sorted_images = images_;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_images != domain_)
        throw Error(ErrorKind::invalid_input, "permutation: not a bijection of its domain");
}

Permutation Permutation::identity(const std::vector<Vertex>& domain)
{
    return Permutation(domain, domain);
}

Permutation Permutation::from_map(const std::map<Vertex, Vertex>& mapping)
{
    std::vector<Vertex> dom;
    std::vector<Vertex> img;
    for (const auto& [a, b] : mapping) {
        dom.push_back(a);
        img.push_back(b);
    }
    return Permutation(std::move(dom), std::move(img));
}

Vertex Permutation::operator()(Vertex v) const
{
    auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v)
        throw Error(ErrorKind::unknown_vertex, "permutation: vertex " + std::to_string(v) + " outside domain");
    return images_[static_cast<std::size_t>(it - domain_.begin())];
}

VertexSet Permutation::operator()(const VertexSet& s) const
{
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s)
        out.push_back((*this)(v));
    return VertexSet(std::move(out));
}

bool Permutation::is_identity() const
{
    return domain_ == images_;
}

Permutation Permutation::inverse() const
{
    return Permutation(images_, domain_);
}

Permutation Permutation::restricted_to(const VertexSet& s) const
{
    std::vector<Vertex> img;
    img.reserve(s.size());
    for (Vertex v : s) {
        const Vertex w = (*this)(v);
        if (!s.contains(w))
            throw Error(ErrorKind::precondition, "permutation does not preserve the subset (" + std::to_string(v) +
                                                     " -> " + std::to_string(w) + ")");
        img.push_back(w);
    }
    return Permutation(s.items(), std::move(img));
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    std::vector<Vertex> img;
    img.reserve(inner.domain().size());
    for (Vertex v : inner.images())
        img.push_back(outer(v));
    return Permutation(inner.domain(), std::move(img));
}

bool is_automorphism(const Graph& g, const Permutation& p)
{
    if (p.domain() != g.vertices())
        return false;
    const std::size_t n = g.order();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[i] = g.index_of(p.images()[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent_at(i, j) != g.adjacent_at(pos[i], pos[j]))
                return false;
    return true;
}

// --------------------------------------------------------- PermutationGroup

PermutationGroup::PermutationGroup(std::vector<Vertex> domain, std::vector<Permutation> generators,
                                   std::optional<std::uint64_t> known_order)
    : domain_(std::move(domain)), known_order_(known_order)
{
    std::sort(domain_.begin(), domain_.end());
    for (auto& gen : generators) {
        if (gen.domain() != domain_)
            throw Error(ErrorKind::invalid_input, "group generator acts on a different vertex set");
        if (!gen.is_identity())
            generators_.push_back(std::move(gen));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

PermutationGroup PermutationGroup::trivial(const std::vector<Vertex>& domain)
{
    return PermutationGroup(domain, {}, 1);
}

std::vector<Permutation> PermutationGroup::elements(std::size_t cap) const
{
    std::set<Permutation> seen;
    std::vector<Permutation> out;
    std::deque<Permutation> queue;
    auto id = Permutation::identity(domain_);
    seen.insert(id);
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : generators_) {
            Permutation next = compose(gen, cur);
            if (seen.insert(next).second) {
                if (out.size() >= cap)
                    throw Error(ErrorKind::cap_exceeded, "group has more than " + std::to_string(cap) + " elements");
                out.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

std::uint64_t PermutationGroup::order(std::size_t cap) const
{
    if (known_order_)
        return *known_order_;
    return elements(cap).size();
}

VertexSet PermutationGroup::orbit(const VertexSet& s) const
{
    std::set<Vertex> seen(s.begin(), s.end());
    std::deque<Vertex> queue(s.begin(), s.end());
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (const auto& gen : generators_) {
            const Vertex w = gen(v);
            if (seen.insert(w).second)
                queue.push_back(w);
        }
    }
    return VertexSet(std::vector<Vertex>(seen.begin(), seen.end()));
}

bool PermutationGroup::is_invariant(const VertexSet& s) const
{
    return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& p) { return p(s) == s; });
}

bool PermutationGroup::acts_on(const Graph& g) const
{
    if (domain_ != g.vertices())
        return false;
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](const Permutation& p) { return is_automorphism(g, p); });
}

PermutationGroup PermutationGroup::restricted_to(const VertexSet& s) const
{
    std::vector<Permutation> gens;
    gens.reserve(generators_.size());
    for (const auto& p : generators_)
        gens.push_back(p.restricted_to(s));
    return PermutationGroup(s.items(), std::move(gens));
}

PermutationGroup PermutationGroup::pushed_to(const Quotient& q) const
{
    std::vector<Vertex> class_ids = q.graph.vertices();
    std::vector<Permutation> gens;
    for (const auto& p : generators_) {
        std::vector<Vertex> img;
        img.reserve(q.classes.size());
        for (const auto& members : q.classes) {
            const Vertex target = q.class_of.at(p(members.front()));
            // The whole class must land in one class for the action to descend.
            for (Vertex m : members)
                if (q.class_of.at(p(m)) != target)
                    throw Error(ErrorKind::internal, "permutation does not respect neighbourhood classes");
            img.push_back(target);
        }
        gens.emplace_back(class_ids, std::move(img));
    }
    return PermutationGroup(std::move(class_ids), std::move(gens));
}

PermutationGroup group_closure(const Graph& g, std::vector<Permutation> generators, std::size_t cap)
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (!is_automorphism(g, generators[i]))
            throw Error(ErrorKind::precondition, "generator " + std::to_string(i) + " is not an automorphism");
    PermutationGroup group(g.vertices(), std::move(generators));
    const auto elems = group.elements(cap);
    return PermutationGroup(g.vertices(), group.generators(), elems.size());
}

// ------------------------------------------------------ automorphism search

namespace {

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()), image_(n_), used_(n_, false)
    {
        degree_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i)
            degree_.push_back(g.closed_row(i).count());
    }

    // Search for an automorphism fixing 0..k-1 and sending k to c.
    bool extend_with(std::size_t k, std::size_t c)
    {
        std::fill(used_.begin(), used_.end(), false);
        for (std::size_t i = 0; i < k; ++i) {
            image_[i] = i;
            used_[i] = true;
        }
        if (!consistent(k, c))
            return false;
        image_[k] = c;
        used_[c] = true;
        return assign(k + 1);
    }

    const std::vector<std::size_t>& image() const { return image_; }

private:
    bool consistent(std::size_t pos, std::size_t target) const
    {
        if (degree_[pos] != degree_[target])
            return false;
        for (std::size_t i = 0; i < pos; ++i)
            if (g_.adjacent_at(i, pos) != g_.adjacent_at(image_[i], target))
                return false;
        return true;
    }

    bool assign(std::size_t pos)
    {
        if (pos == n_)
            return true;
        for (std::size_t c = 0; c < n_; ++c) {
            if (used_[c] || !consistent(pos, c))
                continue;
            image_[pos] = c;
            used_[c] = true;
            if (assign(pos + 1))
                return true;
            used_[c] = false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

} // namespace

PermutationGroup automorphism_group(const Graph& g, std::size_t cap_vertices)
{
    if (g.order() > cap_vertices)
        throw Error(ErrorKind::cap_exceeded, "automorphism search limited to " + std::to_string(cap_vertices) +
                                                 " vertices; supply generators instead");
    const std::size_t n = g.order();
    AutomorphismSearch search(g);
    std::vector<Permutation> gens;
    std::uint64_t order = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t orbit = 1; // k itself, via the identity
        for (std::size_t c = k + 1; c < n; ++c) {
            if (!search.extend_with(k, c))
                continue;
            ++orbit;
            std::vector<Vertex> img(n);
            for (std::size_t i = 0; i < n; ++i)
                img[i] = g.id(search.image()[i]);
            gens.emplace_back(g.vertices(), std::move(img));
        }
        order *= orbit;
    }
    return PermutationGroup(g.vertices(), std::move(gens), order);
}

} // namespace dismantle
