#include "dismantle/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "dismantle/dismantling.hpp"

namespace dismantle {

namespace {

std::vector<Vertex> ids(std::size_t n)
{
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

Vertex vx(std::size_t i)
{
    return static_cast<Vertex>(i);
}

void need(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::invalid_input, what);
}

} // namespace

Graph path_graph(std::size_t n)
{
    need(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(vx(i), vx(i + 1));
    return Graph(ids(n), edges);
}

Graph cycle_graph(std::size_t n)
{
    need(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(vx(i), vx((i + 1) % n));
    return Graph(ids(n), edges);
}

Graph complete_graph(std::size_t n)
{
    need(n >= 1, "complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(vx(i), vx(j));
    return Graph(ids(n), edges);
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, vx(i));
    return Graph(ids(leaves + 1), edges);
}

Graph wheel_graph(std::size_t rim)
{
    need(rim >= 3, "wheel rim needs at least three vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= rim; ++i) {
        edges.emplace_back(0, vx(i));
        edges.emplace_back(vx(i), vx(i % rim + 1));
    }
    return Graph(ids(rim + 1), edges);
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.emplace_back(vx(i), vx((i + 1) % 5));
        edges.emplace_back(vx(5 + i), vx(5 + (i + 2) % 5));
        edges.emplace_back(vx(i), vx(i + 5));
    }
    return Graph(ids(10), edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols)
{
    need(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols)
                edges.emplace_back(vx(v), vx(v + 1));
            if (r + 1 < rows)
                edges.emplace_back(vx(v), vx(v + cols));
        }
    return Graph(ids(rows * cols), edges);
}

Graph standard_graph(std::string_view kind, const std::vector<std::size_t>& params)
{
    auto arity = [&](std::size_t k) {
        need(params.size() == k, std::string(kind) + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "path") {
        arity(1);
        return path_graph(params[0]);
    }
    if (kind == "cycle") {
        arity(1);
        return cycle_graph(params[0]);
    }
    if (kind == "complete") {
        arity(1);
        return complete_graph(params[0]);
    }
    if (kind == "star") {
        arity(1);
        return star_graph(params[0]);
    }
    if (kind == "wheel") {
        arity(1);
        return wheel_graph(params[0]);
    }
    if (kind == "petersen") {
        arity(0);
        return petersen_graph();
    }
    if (kind == "grid") {
        arity(2);
        return grid_graph(params[0], params[1]);
    }
    throw Error(ErrorKind::invalid_input, "unknown graph kind '" + std::string(kind) + "'");
}

Graph random_tree(std::size_t n, std::uint64_t seed)
{
    need(n >= 1, "tree needs at least one vertex");
    if (n <= 2)
        return path_graph(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> code(n - 2);
    for (auto& x : code)
        x = pick(rng);

    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : code)
        ++degree[x];
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (std::size_t x : code) {
        const std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(vx(leaf), vx(x));
        if (--degree[x] == 1)
            leaves.insert(x);
    }
    const std::size_t a = *leaves.begin();
    const std::size_t b = *std::next(leaves.begin());
    edges.emplace_back(vx(a), vx(b));
    return Graph(ids(n), edges);
}

Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed)
{
    need(n >= 1, "graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    const Graph tree = random_tree(n, rng());
    std::set<Edge> edges;
    for (const auto& e : tree.edges())
        edges.insert(e);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace(vx(i), vx(j));
    return Graph(ids(n), std::vector<Edge>(edges.begin(), edges.end()));
}

Graph random_symmetric_dismantlable(std::size_t n, std::uint64_t seed)
{
    need(n >= 1, "graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    const std::size_t core = std::max<std::size_t>(1, std::uniform_int_distribution<std::size_t>(1, (n + 1) / 2)(rng));
    const Graph base = random_dismantlable(core, std::uniform_int_distribution<std::size_t>(0, core)(rng), rng());
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& [a, b] : base.edges()) {
        adj[static_cast<std::size_t>(a)].insert(static_cast<std::size_t>(b));
        adj[static_cast<std::size_t>(b)].insert(static_cast<std::size_t>(a));
    }
    // Each new vertex is dominated when added, so it can be dismantled first.
    std::size_t m = core;
    while (m < n) {
        const std::size_t v = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
        if (m + 2 <= n && std::bernoulli_distribution(0.4)(rng)) {
            for (std::size_t leaf : {m, m + 1}) {
                adj[leaf].insert(v);
                adj[v].insert(leaf);
            }
            m += 2;
        } else {
            const std::set<std::size_t> nb = adj[v];
            for (std::size_t x : nb) {
                adj[m].insert(x);
                adj[x].insert(m);
            }
            adj[m].insert(v);
            adj[v].insert(m);
            m += 1;
        }
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : adj[a])
            if (a < b)
                edges.emplace_back(vx(a), vx(b));
    Graph g(ids(n), edges);
    if (!is_dismantlable(g))
        throw Error(ErrorKind::internal, "random_symmetric_dismantlable produced a non-dismantlable graph");
    return g;
}

Permutation cycle_rotation(std::size_t n)
{
    std::vector<Vertex> img(n);
    for (std::size_t i = 0; i < n; ++i)
        img[i] = vx((i + 1) % n);
    return Permutation(ids(n), img);
}

Permutation cycle_reflection(std::size_t n)
{
    std::vector<Vertex> img(n);
    for (std::size_t i = 0; i < n; ++i)
        img[i] = vx((n - i) % n);
    return Permutation(ids(n), img);
}

Permutation path_reflection(std::size_t n)
{
    std::vector<Vertex> img(n);
    for (std::size_t i = 0; i < n; ++i)
        img[i] = vx(n - 1 - i);
    return Permutation(ids(n), img);
}

RotationalTree rotational_tree(std::size_t branch, std::size_t copies, std::uint64_t seed)
{
    need(branch >= 1 && copies >= 1, "rotational tree needs a nonempty branch and at least one copy");
    const Graph piece = random_tree(branch, seed);
    const std::size_t n = 1 + branch * copies;
    auto at = [&](std::size_t c, std::size_t i) { return vx(1 + c * branch + i); };
    std::vector<Edge> edges;
    std::vector<Vertex> img(n);
    img[0] = 0;
    for (std::size_t c = 0; c < copies; ++c) {
        edges.emplace_back(0, at(c, 0));
        for (const auto& [a, b] : piece.edges())
            edges.emplace_back(at(c, static_cast<std::size_t>(a)), at(c, static_cast<std::size_t>(b)));
        for (std::size_t i = 0; i < branch; ++i)
            img[static_cast<std::size_t>(at(c, i))] = at((c + 1) % copies, i);
    }
    return {Graph(ids(n), edges), Permutation(ids(n), img)};
}

Graph free_group_ball(std::size_t rank, std::size_t radius, std::size_t cap)
{
    need(rank >= 1, "free group rank must be at least 1");
    const std::size_t letters = 2 * rank;
    std::size_t total = 1;
    std::size_t layer = 1;
    for (std::size_t k = 1; k <= radius; ++k) {
        const std::size_t factor = k == 1 ? letters : letters - 1;
        if (layer > cap / factor || total + layer * factor > cap)
            throw Error(ErrorKind::cap_exceeded, "free group ball exceeds " + std::to_string(cap) + " vertices");
        layer *= factor;
        total += layer;
    }
    // Letter x and its inverse are x and x ^ 1.
    std::vector<Edge> edges;
    std::vector<std::pair<std::size_t, std::size_t>> frontier{{0, letters}}; // (vertex, last letter)
    std::size_t next = 1;
    for (std::size_t k = 1; k <= radius; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> grown;
        for (const auto& [v, last] : frontier)
            for (std::size_t x = 0; x < letters; ++x) {
                if (last != letters && x == (last ^ 1))
                    continue;
                edges.emplace_back(vx(v), vx(next));
                grown.emplace_back(next++, x);
            }
        frontier = std::move(grown);
    }
    return Graph(ids(total), edges);
}

std::vector<PolygonDiagonal> polygon_diagonals(std::size_t n)
{
    std::vector<PolygonDiagonal> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1))
                out.push_back({vx(i), vx(j)});
    return out;
}

PolygonDiagonal make_diagonal(std::size_t n, Vertex a, Vertex b)
{
    const auto nn = static_cast<Vertex>(n);
    need(a >= 0 && b >= 0 && a < nn && b < nn, "diagonal endpoints must be polygon corners");
    need(a != b, "diagonal endpoints must differ");
    PolygonDiagonal d{std::min(a, b), std::max(a, b)};
    need(d.j - d.i != 1 && !(d.i == 0 && d.j == nn - 1),
         "(" + std::to_string(a) + "," + std::to_string(b) + ") is a polygon side");
    return d;
}

Vertex diagonal_id(std::size_t n, PolygonDiagonal d)
{
    const auto all = polygon_diagonals(n);
    auto it = std::lower_bound(all.begin(), all.end(), d);
    need(it != all.end() && *it == d, "not a diagonal of the polygon");
    return static_cast<Vertex>(it - all.begin());
}

bool crosses(PolygonDiagonal a, PolygonDiagonal b)
{
    auto inside = [&](Vertex x) { return a.i < x && x < a.j; };
    if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j)
        return false;
    return inside(b.i) != inside(b.j);
}

Graph polygon_diagonal_graph(std::size_t n)
{
    need(n >= 4, "polygon needs at least four corners");
    const auto all = polygon_diagonals(n);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (!crosses(all[a], all[b]))
                edges.emplace_back(vx(a), vx(b));
    return Graph(ids(all.size()), edges);
}

SurgeryResult polygon_surgery(std::size_t n, PolygonDiagonal sigma, PolygonDiagonal rho)
{
    sigma = make_diagonal(n, sigma.i, sigma.j);
    rho = make_diagonal(n, rho.i, rho.j);
    need(!(sigma == rho), "surgery needs two different diagonals");
    SurgeryResult out{{}, false};
    if (!crosses(sigma, rho)) {
        const Vertex s = diagonal_id(n, sigma);
        out.pairs.emplace_back(s, s);
        return out;
    }
    auto essential = [&](Vertex p, Vertex x) -> std::optional<Vertex> {
        const Vertex lo = std::min(p, x);
        const Vertex hi = std::max(p, x);
        if (hi - lo == 1 || (lo == 0 && hi == static_cast<Vertex>(n) - 1))
            return std::nullopt;
        return diagonal_id(n, {lo, hi});
    };
    for (Vertex p : {sigma.i, sigma.j}) {
        const auto a = essential(p, rho.i);
        const auto b = essential(p, rho.j);
        if (a && b)
            out.pairs.emplace_back(*a, *b);
        else if (a || b)
            out.pairs.emplace_back(a ? *a : *b, a ? *a : *b);
    }
    out.pairs = normalized(std::move(out.pairs));
    out.undefined = out.pairs.empty();
    return out;
}

PolygonProjection polygon_projection(std::size_t n, PolygonDiagonal sigma)
{
    PolygonProjection out;
    out.projection.sigma = diagonal_id(n, sigma);
    for (const auto& rho : polygon_diagonals(n)) {
        if (rho == sigma)
            continue;
        auto res = polygon_surgery(n, sigma, rho);
        if (res.undefined)
            out.undefined_rows.push_back(diagonal_id(n, rho));
        else
            out.projection.table.emplace(diagonal_id(n, rho), std::move(res.pairs));
    }
    return out;
}

std::vector<Permutation> polygon_dihedral_generators(std::size_t n)
{
    const auto all = polygon_diagonals(n);
    auto act = [&](auto corner) {
        std::vector<Vertex> img;
        for (const auto& d : all) {
            const Vertex a = corner(d.i);
            const Vertex b = corner(d.j);
            img.push_back(diagonal_id(n, {std::min(a, b), std::max(a, b)}));
        }
        return Permutation(ids(all.size()), img);
    };
    const auto nn = static_cast<Vertex>(n);
    return {act([&](Vertex x) { return (x + 1) % nn; }), act([&](Vertex x) { return (nn - x) % nn; })};
}

} // namespace dismantle
