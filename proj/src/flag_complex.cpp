#include "dismantle/flag_complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "dismantle/dismantling.hpp"

namespace dismantle {

// -------------------------------------------------------- SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<Face> faces)
{
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::invalid_input, "face with a repeated vertex");
    }
    std::erase_if(faces, [](const Face& f) { return f.empty(); });
    // Longest first, so a face only needs comparing with those kept so far.
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
        const bool covered = std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) {
            return std::includes(m.begin(), m.end(), f.begin(), f.end());
        });
        if (!covered)
            maximal_.push_back(std::move(f));
    }
    std::sort(maximal_.begin(), maximal_.end());
}

VertexSet SimplicialComplex::vertices() const
{
    std::vector<Vertex> out;
    for (const auto& f : maximal_)
        out.insert(out.end(), f.begin(), f.end());
    return VertexSet(std::move(out));
}

int SimplicialComplex::dimension() const
{
    std::size_t best = 0;
    for (const auto& f : maximal_)
        best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

bool SimplicialComplex::contains(const Face& face) const
{
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty())
        return true;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) {
        return std::includes(m.begin(), m.end(), sorted.begin(), sorted.end());
    });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension(std::size_t face_cap) const
{
    std::vector<std::set<Face>> by_dim(static_cast<std::size_t>(dimension() + 1));
    std::size_t total = 0;
    for (const auto& m : maximal_) {
        if (m.size() >= 63)
            throw Error(ErrorKind::cap_exceeded, "face too large to expand");
        const std::uint64_t subsets = std::uint64_t{1} << m.size();
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            Face f;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (mask >> i & 1)
                    f.push_back(m[i]);
            const std::size_t d = f.size() - 1;
            if (by_dim[d].insert(std::move(f)).second && ++total > face_cap)
                throw Error(ErrorKind::cap_exceeded, "complex has more than " + std::to_string(face_cap) + " faces");
        }
    }
    std::vector<std::vector<Face>> out;
    out.reserve(by_dim.size());
    for (auto& s : by_dim)
        out.emplace_back(s.begin(), s.end());
    return out;
}

std::size_t SimplicialComplex::face_count(std::size_t face_cap) const
{
    std::size_t total = 0;
    for (const auto& level : faces_by_dimension(face_cap))
        total += level.size();
    return total;
}

// ------------------------------------------------------------------ cliques

namespace {

void check_dim(std::size_t size, std::size_t dim_cap)
{
    if (size > dim_cap + 1)
        throw Error(ErrorKind::cap_exceeded, "clique of dimension " + std::to_string(size - 1) +
                                                 " exceeds the cap " + std::to_string(dim_cap));
}

Bits open_row(const Graph& g, std::size_t v)
{
    Bits row = g.closed_row(v);
    row.reset(v);
    return row;
}

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, Bits p, Bits x, std::size_t dim_cap,
                   std::vector<Face>& out)
{
    if (p.none() && x.none()) {
        check_dim(r.size(), dim_cap);
        Face f;
        for (std::size_t v : r)
            f.push_back(g.id(v));
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
        return;
    }
    const Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = 0;
    for (std::size_t u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
        const std::size_t c = (p & open_row(g, u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    const Bits candidates = p - open_row(g, pivot);
    for (std::size_t v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        const Bits nv = open_row(g, v);
        r.push_back(v);
        bron_kerbosch(g, r, p & nv, x & nv, dim_cap, out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

bool size_then_lex(const Face& a, const Face& b)
{
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

} // namespace

std::vector<Face> maximal_cliques(const Graph& g, std::size_t dim_cap)
{
    std::vector<Face> out;
    if (g.empty())
        return out;
    std::vector<std::size_t> r;
    bron_kerbosch(g, r, g.all_bits(), Bits(g.order()), dim_cap, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> all_cliques(const Graph& g, std::size_t dim_cap)
{
    std::vector<Face> out;
    std::vector<std::size_t> current;
    // Extend by higher positions only, so each clique is produced once.
    auto grow = [&](auto&& self, const Bits& common) -> void {
        for (std::size_t v = common.find_first(); v != Bits::npos; v = common.find_next(v)) {
            current.push_back(v);
            check_dim(current.size(), dim_cap);
            Face f;
            for (std::size_t p : current)
                f.push_back(g.id(p));
            out.push_back(std::move(f));
            Bits next = common & open_row(g, v);
            for (std::size_t w = next.find_first(); w != Bits::npos && w <= v; w = next.find_next(w))
                next.reset(w);
            self(self, next);
            current.pop_back();
        }
    };
    grow(grow, g.all_bits());
    std::sort(out.begin(), out.end(), size_then_lex);
    return out;
}

SimplicialComplex flag_complex(const Graph& g, std::size_t dim_cap)
{
    return SimplicialComplex(maximal_cliques(g, dim_cap));
}

// ------------------------------------------------------- invariant simplices

namespace {

// Vertex orbits that are cliques, and which pairs of them are fully joined.
struct OrbitCliques {
    std::vector<VertexSet> orbits;
    std::vector<std::vector<char>> joined;
};

OrbitCliques orbit_cliques(const Graph& g, const PermutationGroup& h)
{
    if (!h.acts_on(g))
        throw Error(ErrorKind::precondition, "group does not act on the graph by automorphisms");
    OrbitCliques oc;
    std::set<Vertex> seen;
    for (Vertex v : g.vertices()) {
        if (seen.count(v))
            continue;
        const VertexSet orbit = h.orbit(VertexSet{v});
        seen.insert(orbit.begin(), orbit.end());
        if (is_clique(g, orbit))
            oc.orbits.push_back(orbit);
    }
    const std::size_t k = oc.orbits.size();
    oc.joined.assign(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            oc.joined[i][j] = oc.joined[j][i] = is_clique(g, oc.orbits[i].united(oc.orbits[j]));
    return oc;
}

} // namespace

std::vector<Face> invariant_cliques(const Graph& g, const PermutationGroup& h, std::size_t dim_cap)
{
    const OrbitCliques oc = orbit_cliques(g, h);
    std::vector<Face> out;
    std::vector<std::size_t> chosen;
    auto grow = [&](auto&& self, std::size_t from, const VertexSet& current) -> void {
        for (std::size_t i = from; i < oc.orbits.size(); ++i) {
            bool ok = true;
            for (std::size_t c : chosen)
                ok = ok && oc.joined[c][i];
            if (!ok)
                continue;
            const VertexSet next = current.united(oc.orbits[i]);
            check_dim(next.size(), dim_cap);
            out.push_back(next.items());
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    grow(grow, 0, VertexSet{});
    std::sort(out.begin(), out.end(), size_then_lex);
    return out;
}

InvariantPoset invariant_simplex_poset(const Graph& g, const PermutationGroup& h, std::size_t dim_cap)
{
    InvariantPoset poset;
    poset.elements = invariant_cliques(g, h, dim_cap);
    const OrbitCliques oc = orbit_cliques(g, h);
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        index.emplace(poset.elements[i], i);
    // Going up one step in this poset means adding exactly one orbit.
    poset.covers.resize(poset.elements.size());
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        const VertexSet base(poset.elements[i]);
        for (const auto& orbit : oc.orbits) {
            if (orbit.is_subset_of(base))
                continue;
            auto it = index.find(base.united(orbit).items());
            if (it != index.end())
                poset.covers[i].push_back(it->second);
        }
        std::sort(poset.covers[i].begin(), poset.covers[i].end());
    }
    return poset;
}

FixedSubcomplex fixed_subcomplex(const Graph& g, const PermutationGroup& h, std::size_t dim_cap, std::size_t chain_cap)
{
    const InvariantPoset poset = invariant_simplex_poset(g, h, dim_cap);
    const std::size_t k = poset.elements.size();
    std::vector<char> has_lower(k, 0);
    for (const auto& up : poset.covers)
        for (std::size_t j : up)
            has_lower[j] = 1;

    std::vector<Face> chains;
    Face chain;
    auto walk = [&](auto&& self, std::size_t i) -> void {
        chain.push_back(static_cast<Vertex>(i));
        if (poset.covers[i].empty()) {
            if (chains.size() >= chain_cap)
                throw Error(ErrorKind::cap_exceeded, "fixed subcomplex has more than " + std::to_string(chain_cap) +
                                                         " maximal chains");
            chains.push_back(chain);
        }
        for (std::size_t j : poset.covers[i])
            self(self, j);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < k; ++i)
        if (!has_lower[i])
            walk(walk, i);
    return {SimplicialComplex(std::move(chains)), poset.elements};
}

DomSimplex dom_simplex(const Graph& g, Vertex sigma)
{
    const VertexSet doms = dominators(g, sigma);
    DomSimplex out{sigma, doms.empty() ? VertexSet{sigma} : doms, !doms.empty(), false};
    out.is_clique = is_clique(g, out.vertices);
    return out;
}

// ----------------------------------------------------------------- homology

std::size_t ReducedBetti::at(int dim) const
{
    const auto i = static_cast<std::size_t>(dim + 1);
    return dim < -1 || i >= values.size() ? 0 : values[i];
}

bool ReducedBetti::trivial() const
{
    return std::all_of(values.begin(), values.end(), [](std::size_t b) { return b == 0; });
}

namespace {

// Rank over GF(2) of a sparse matrix given by columns of sorted row indices.
std::size_t gf2_rank(std::vector<std::vector<std::size_t>> columns, std::size_t rows)
{
    std::vector<std::size_t> owner(rows, SIZE_MAX);
    std::size_t rank = 0;
    std::vector<std::size_t> scratch;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        while (!col.empty()) {
            const std::size_t low = col.back();
            if (owner[low] == SIZE_MAX) {
                owner[low] = c;
                ++rank;
                break;
            }
            const auto& other = columns[owner[low]];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

} // namespace

ReducedBetti gf2_homology(const SimplicialComplex& k, std::size_t face_cap)
{
    const auto faces = k.faces_by_dimension(face_cap);
    const std::size_t top = faces.size(); // dimensions 0..top-1
    // rank[d] = rank of the boundary map out of dimension d; d = 0 is the augmentation.
    std::vector<std::size_t> rank(top + 1, 0);
    if (top > 0)
        rank[0] = faces[0].empty() ? 0 : 1;
    for (std::size_t d = 1; d < top; ++d) {
        std::map<Face, std::size_t> lower;
        for (std::size_t i = 0; i < faces[d - 1].size(); ++i)
            lower.emplace(faces[d - 1][i], i);
        std::vector<std::vector<std::size_t>> columns;
        columns.reserve(faces[d].size());
        for (const auto& f : faces[d]) {
            std::vector<std::size_t> col;
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                Face facet;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != skip)
                        facet.push_back(f[i]);
                col.push_back(lower.at(facet));
            }
            std::sort(col.begin(), col.end());
            columns.push_back(std::move(col));
        }
        rank[d] = gf2_rank(std::move(columns), faces[d - 1].size());
    }

    ReducedBetti out;
    out.values.push_back(1 - (top > 0 ? rank[0] : 0));
    for (std::size_t d = 0; d < top; ++d)
        out.values.push_back(faces[d].size() - rank[d] - rank[d + 1]);
    return out;
}

bool greedy_collapse(const SimplicialComplex& k, std::uint64_t seed, std::size_t face_cap)
{
    if (k.empty())
        throw Error(ErrorKind::invalid_input, "greedy_collapse: empty complex");
    const auto by_dim = k.faces_by_dimension(face_cap);
    std::vector<Face> faces;
    std::map<Face, std::size_t> id;
    for (const auto& level : by_dim)
        for (const auto& f : level) {
            id.emplace(f, faces.size());
            faces.push_back(f);
        }
    const std::size_t total = faces.size();
    std::vector<std::vector<std::size_t>> facets(total);
    std::vector<std::vector<std::size_t>> cofaces(total);
    for (std::size_t i = 0; i < total; ++i) {
        const Face& f = faces[i];
        if (f.size() < 2)
            continue;
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Face facet;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != skip)
                    facet.push_back(f[j]);
            const std::size_t fi = id.at(facet);
            facets[i].push_back(fi);
            cofaces[fi].push_back(i);
        }
    }

    std::vector<char> alive(total, 1);
    std::vector<std::size_t> count(total);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < total; ++i) {
        count[i] = cofaces[i].size();
        if (count[i] == 1)
            candidates.push_back(i);
    }
    std::mt19937_64 rng(seed);
    std::size_t remaining = total;
    // A face with exactly one coface one dimension up is free; that coface is then maximal.
    while (!candidates.empty()) {
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
        const std::size_t tau = candidates[pick];
        candidates[pick] = candidates.back();
        candidates.pop_back();
        if (!alive[tau] || count[tau] != 1)
            continue;
        std::size_t sigma = SIZE_MAX;
        for (std::size_t c : cofaces[tau])
            if (alive[c])
                sigma = c;
        alive[tau] = alive[sigma] = 0;
        remaining -= 2;
        for (std::size_t f : facets[sigma])
            if (alive[f] && --count[f] == 1)
                candidates.push_back(f);
        for (std::size_t f : facets[tau])
            if (alive[f] && --count[f] == 1)
                candidates.push_back(f);
    }
    return remaining == 1;
}

// ------------------------------------------------------------ reduction

namespace {

ReducedBetti trimmed(ReducedBetti b)
{
    while (!b.values.empty() && b.values.back() == 0)
        b.values.pop_back();
    return b;
}

} // namespace

ReductionCertificate theorem15_reduction(const Graph& g, const PermutationGroup& h, std::size_t dim_cap)
{
    if (!is_dismantlable(g))
        throw Error(ErrorKind::not_dismantlable, "theorem15_reduction: graph is not dismantlable");
    if (!h.acts_on(g))
        throw Error(ErrorKind::precondition, "theorem15_reduction: group does not act on the graph");

    ReductionCertificate cert;
    Graph cur = g;
    PermutationGroup group = h;
    while (true) {
        ReductionStage stage{ReductionKind::terminal, cur, group, {}, {}, {}, 0, {}};
        const FixedSubcomplex fixed = fixed_subcomplex(cur, group, dim_cap);
        stage.fixed_vertices = fixed.labels.size();
        stage.fixed_homology = gf2_homology(fixed.complex);
        if (!cert.stages.empty() &&
            trimmed(stage.fixed_homology) != trimmed(cert.stages.back().fixed_homology))
            throw Error(ErrorKind::counterexample, "fixed-subcomplex homology changed at reduction stage " +
                                                       std::to_string(cert.stages.size()));
        if (cur.order() == 1) {
            cert.stages.push_back(std::move(stage));
            break;
        }
        if (!is_dismantlable(cur))
            throw Error(ErrorKind::internal, "reduction stage graph is not dismantlable");

        if (has_equal_neighborhoods(cur)) {
            stage.kind = ReductionKind::quotient;
            const Quotient q = equal_neighborhood_quotient(cur);
            for (const auto& cls : q.classes)
                if (cls.size() > 1)
                    stage.classes.push_back(cls);
            std::map<Vertex, Vertex> rename;
            for (std::size_t c = 0; c < q.classes.size(); ++c)
                rename[q.classes[c].front()] = static_cast<Vertex>(c);
            if (relabeled(induced_subgraph(cur, q.representatives()), rename) != q.graph)
                throw Error(ErrorKind::internal, "quotient differs from the subgraph on class representatives");
            group = group.pushed_to(q);
            cur = q.graph;
        } else {
            stage.kind = ReductionKind::remove_dominated;
            std::set<Vertex> dominating;
            std::vector<Vertex> dominated;
            for (Vertex v : cur.vertices()) {
                const VertexSet doms = dominators(cur, v);
                dominating.insert(doms.begin(), doms.end());
                if (!doms.empty())
                    dominated.push_back(v);
            }
            std::vector<Vertex> removed;
            for (Vertex v : dominated)
                if (!dominating.count(v))
                    removed.push_back(v);
            if (removed.empty())
                throw Error(ErrorKind::internal, "no dominated vertex that dominates nothing");
            stage.removed = VertexSet(std::move(removed));
            const VertexSet keep = cur.vertex_set().without(stage.removed);
            for (Vertex v : stage.removed) {
                DomSimplex dom = dom_simplex(cur, v);
                if (!dom.is_clique || !dom.vertices.is_subset_of(keep))
                    throw Error(ErrorKind::internal, "dom simplex of " + std::to_string(v) +
                                                         " is not a simplex of the next stage");
                stage.dom.push_back(std::move(dom));
            }
            if (!group.is_invariant(keep))
                throw Error(ErrorKind::internal, "kept vertices are not invariant");
            group = group.restricted_to(keep);
            cur = induced_subgraph(cur, keep);
        }
        if (!group.acts_on(cur))
            throw Error(ErrorKind::internal, "transported group is not an automorphism group");
        cert.stages.push_back(std::move(stage));
    }
    return cert;
}

const char* to_string(ReductionKind kind)
{
    switch (kind) {
    case ReductionKind::remove_dominated: return "remove_dominated";
    case ReductionKind::quotient: return "quotient";
    case ReductionKind::terminal: return "terminal";
    }
    return "?";
}

} // namespace dismantle
