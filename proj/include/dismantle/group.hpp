#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dismantle/graph.hpp"

namespace dismantle {

/// Bijection of a finite set of vertex ids onto itself.
class Permutation {
public:
    Permutation() = default;
    /// `domain` is sorted internally; images[i] is the image of the i-th
    /// domain element in the order given. Throws if not a bijection.
    Permutation(std::vector<Vertex> domain, std::vector<Vertex> images);

    static Permutation identity(const std::vector<Vertex>& domain);
    static Permutation from_map(const std::map<Vertex, Vertex>& mapping);

    /// Throws Error(unknown_vertex) outside the domain.
    Vertex operator()(Vertex v) const;
    VertexSet operator()(const VertexSet& s) const;

    const std::vector<Vertex>& domain() const { return domain_; }
    const std::vector<Vertex>& images() const { return images_; }
    bool is_identity() const;

    Permutation inverse() const;
    /// Throws Error(precondition) if `s` is not mapped onto itself.
    Permutation restricted_to(const VertexSet& s) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    std::vector<Vertex> domain_;
    std::vector<Vertex> images_;
};

/// outer ∘ inner, i.e. v ↦ outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Finite permutation group given by generators over a fixed domain.
///
/// Invariance and equivariance questions only need the generators: a set
/// fixed by every generator is fixed by the generated group. The element
/// list is materialised on request and bounded by a cap.
class PermutationGroup {
public:
    PermutationGroup() = default;
    PermutationGroup(std::vector<Vertex> domain, std::vector<Permutation> generators,
                     std::optional<std::uint64_t> known_order = std::nullopt);

    static PermutationGroup trivial(const std::vector<Vertex>& domain);

    const std::vector<Vertex>& domain() const { return domain_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::optional<std::uint64_t> known_order() const { return known_order_; }

    /// Breadth-first closure. Throws Error(cap_exceeded) past `cap` elements.
    std::vector<Permutation> elements(std::size_t cap = 100000) const;
    std::uint64_t order(std::size_t cap = 100000) const;

    VertexSet orbit(const VertexSet& s) const;
    bool is_invariant(const VertexSet& s) const;
    bool acts_on(const Graph& g) const;

    /// Restriction to an invariant subset. Throws if `s` is not invariant.
    PermutationGroup restricted_to(const VertexSet& s) const;
    /// Induced action on equal-neighbourhood classes.
    PermutationGroup pushed_to(const Quotient& q) const;

private:
    std::vector<Vertex> domain_;
    std::vector<Permutation> generators_;
    std::optional<std::uint64_t> known_order_;
};

/// Verifies each generator is an automorphism of `g`, then materialises the
/// group. Throws Error(precondition) for a non-automorphism and
/// Error(cap_exceeded) when the group is larger than `cap`.
PermutationGroup group_closure(const Graph& g, std::vector<Permutation> generators, std::size_t cap);

inline constexpr std::size_t default_automorphism_vertex_cap = 12;

/// Full automorphism group by backtracking with degree pruning.
///
/// The result carries a strong generating set: for each base point k (in
/// vertex order) one automorphism fixing the earlier base points for every
/// reachable image of k. Its order is the product of those orbit sizes.
PermutationGroup automorphism_group(const Graph& g,
                                    std::size_t cap_vertices = default_automorphism_vertex_cap);

} // namespace dismantle
