#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"

namespace dismantle {

/// Sorted vertex list of a simplex.
using Face = std::vector<Vertex>;

inline constexpr std::size_t default_dim_cap = 20;
inline constexpr std::size_t default_face_cap = 2'000'000;

/// Finite abstract simplicial complex stored by its maximal faces.
class SimplicialComplex {
public:
    /// The empty complex.
    SimplicialComplex() = default;
    /// Drops duplicates and faces contained in other listed faces.
    explicit SimplicialComplex(std::vector<Face> faces);

    const std::vector<Face>& maximal_faces() const { return maximal_; }
    VertexSet vertices() const;
    bool empty() const { return maximal_.empty(); }
    /// -1 for the empty complex.
    int dimension() const;
    bool contains(const Face& face) const;

    /// Every face grouped by dimension. Throws Error(cap_exceeded) past `face_cap`.
    std::vector<std::vector<Face>> faces_by_dimension(std::size_t face_cap = default_face_cap) const;
    std::size_t face_count(std::size_t face_cap = default_face_cap) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Face> maximal_;
};

/// Maximal cliques of g (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order. Throws Error(cap_exceeded) for a clique of
/// dimension above dim_cap.
std::vector<Face> maximal_cliques(const Graph& g, std::size_t dim_cap = default_dim_cap);

/// Every nonempty clique, ordered by size then lexicographically.
std::vector<Face> all_cliques(const Graph& g, std::size_t dim_cap = default_dim_cap);

SimplicialComplex flag_complex(const Graph& g, std::size_t dim_cap = default_dim_cap);

/// Cliques fixed setwise by h, ordered by size then lexicographically.
/// Such a clique is a union of vertex orbits that are themselves cliques
/// and pairwise completely joined, so only those unions are enumerated.
std::vector<Face> invariant_cliques(const Graph& g, const PermutationGroup& h, std::size_t dim_cap = default_dim_cap);

/// Invariant cliques with the strict-inclusion cover relation.
struct InvariantPoset {
    std::vector<Face> elements;
    std::vector<std::vector<std::size_t>> covers; // covers[i]: j with elements[i] ⊂ elements[j] maximal
};

InvariantPoset invariant_simplex_poset(const Graph& g, const PermutationGroup& h, std::size_t dim_cap = default_dim_cap);

/// Fixed set of h on the flag complex, triangulated as the order complex of
/// the invariant-clique poset. Vertex k of `complex` stands for labels[k].
struct FixedSubcomplex {
    SimplicialComplex complex;
    std::vector<Face> labels;
};

inline constexpr std::size_t default_chain_cap = 500'000;

/// Throws Error(cap_exceeded) when the poset has more than `chain_cap`
/// maximal chains.
FixedSubcomplex fixed_subcomplex(const Graph& g, const PermutationGroup& h, std::size_t dim_cap = default_dim_cap,
                                 std::size_t chain_cap = default_chain_cap);

/// Simplex spanned by the vertices dominating sigma, or {sigma} when
/// nothing dominates it.
struct DomSimplex {
    Vertex base;
    VertexSet vertices;
    bool dominated;
    bool is_clique;
};

DomSimplex dom_simplex(const Graph& g, Vertex sigma);

/// Reduced Betti numbers over GF(2). values[k] is the rank in dimension
/// k - 1, so values[0] is 1 exactly for the empty complex.
struct ReducedBetti {
    std::vector<std::size_t> values;

    std::size_t at(int dim) const;
    bool trivial() const;

    friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;
};

ReducedBetti gf2_homology(const SimplicialComplex& k, std::size_t face_cap = default_face_cap);

/// Elementary collapses through free faces, chosen in a seed-keyed random
/// order, until stuck. True iff a single vertex remains; false proves
/// nothing. Throws Error(invalid_input) for the empty complex.
bool greedy_collapse(const SimplicialComplex& k, std::uint64_t seed, std::size_t face_cap = default_face_cap);

enum class ReductionKind { remove_dominated, quotient, terminal };

struct ReductionStage {
    ReductionKind kind;
    Graph graph;
    PermutationGroup group;
    VertexSet removed;              // remove_dominated: dominated and not dominating
    std::vector<VertexSet> classes; // quotient: classes of size > 1
    std::vector<DomSimplex> dom;    // remove_dominated: dom simplex of every removed vertex
    std::size_t fixed_vertices = 0; // vertices of the fixed subcomplex
    ReducedBetti fixed_homology;
};

struct ReductionCertificate {
    std::vector<ReductionStage> stages;
};

/// Repeats the two-case reduction down to one vertex: with no two equal
/// closed neighbourhoods, delete the dominated vertices that dominate
/// nothing; otherwise pass to the equal-neighbourhood quotient. At each
/// stage the fixed subcomplex's reduced homology is recomputed and must
/// match the previous stage, dom simplices of removed vertices must lie in
/// the next graph, and a quotient must match the subgraph induced on class
/// representatives.
///
/// Throws Error(not_dismantlable), Error(precondition) (h not acting),
/// Error(counterexample) if a stage changes the homology, Error(internal)
/// for a failed structural check.
ReductionCertificate theorem15_reduction(const Graph& g, const PermutationGroup& h,
                                         std::size_t dim_cap = default_dim_cap);

const char* to_string(ReductionKind kind);

} // namespace dismantle
