#include "dismantle/io.hpp"

#include <fstream>
#include <sstream>

namespace dismantle {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorKind::invalid_input, what);
}

Vertex vertex_from(const Json& j, const char* where)
{
    if (!j.is_number_integer())
        bad(std::string(where) + ": expected an integer vertex id");
    return j.get<Vertex>();
}

std::vector<Vertex> vertices_from(const Json& j, const char* where)
{
    if (!j.is_array())
        bad(std::string(where) + ": expected an array of vertex ids");
    std::vector<Vertex> out;
    for (const auto& x : j)
        out.push_back(vertex_from(x, where));
    return out;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

PairSet pairs_from(const Json& j)
{
    if (!j.is_array())
        bad("projection row: expected an array of pairs");
    PairSet out;
    for (const auto& pr : j) {
        const auto members = vertices_from(pr, "projection pair");
        if (members.size() == 1)
            out.emplace_back(members[0], members[0]);
        else if (members.size() == 2)
            out.emplace_back(members[0], members[1]);
        else
            bad("projection pair must have one or two members");
    }
    return normalized(std::move(out));
}

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

Graph graph_from_json(const Json& j)
{
    const Json& vs = field(j, "vertices");
    std::vector<Vertex> vertices;
    if (vs.is_number_unsigned() || vs.is_number_integer()) {
        const auto n = vs.get<std::int64_t>();
        if (n < 0)
            bad("vertex count must be nonnegative");
        for (Vertex v = 0; v < n; ++v)
            vertices.push_back(v);
    } else {
        vertices = vertices_from(vs, "graph vertices");
    }
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j.at("edges").is_array())
            bad("graph edges: expected an array");
        for (const auto& e : j.at("edges")) {
            const auto ends = vertices_from(e, "graph edge");
            if (ends.size() != 2)
                bad("graph edge must have two endpoints");
            edges.emplace_back(ends[0], ends[1]);
        }
    }
    return Graph(std::move(vertices), edges);
}

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({a, b});
    return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

VertexSet vertex_set_from_json(const Json& j)
{
    return VertexSet(vertices_from(j, "vertex set"));
}

Json to_json(const VertexSet& s)
{
    return Json(s.items());
}

Permutation permutation_from_json(const Json& j, const std::vector<Vertex>& domain)
{
    auto images = vertices_from(j, "permutation");
    if (images.size() != domain.size())
        bad("permutation has " + std::to_string(images.size()) + " entries for " + std::to_string(domain.size()) +
            " vertices");
    return Permutation(domain, std::move(images));
}

Json to_json(const Permutation& p)
{
    return Json(p.images());
}

PermutationGroup group_from_json(const Json& j, const Graph& g)
{
    const Json& gens = field(j, "generators");
    if (!gens.is_array())
        bad("group generators: expected an array");
    std::vector<Permutation> perms;
    for (const auto& p : gens)
        perms.push_back(permutation_from_json(p, g.vertices()));
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (!is_automorphism(g, perms[i]))
            throw Error(ErrorKind::precondition, "generator " + std::to_string(i) + " is not an automorphism");
    std::optional<std::uint64_t> order;
    if (j.contains("order"))
        order = j.at("order").get<std::uint64_t>();
    return PermutationGroup(g.vertices(), std::move(perms), order);
}

Json to_json(const PermutationGroup& h)
{
    Json gens = Json::array();
    for (const auto& p : h.generators())
        gens.push_back(to_json(p));
    Json out{{"generators", std::move(gens)}};
    if (h.known_order())
        out["order"] = *h.known_order();
    return out;
}

DismantlingTrace trace_from_json(const Json& j)
{
    return {vertices_from(field(j, "order"), "trace order"), vertices_from(field(j, "witnesses"), "trace witnesses")};
}

Json to_json(const DismantlingTrace& t)
{
    return Json{{"order", t.order}, {"witnesses", t.witnesses}};
}

DismantlingProjection projection_from_json(const Json& j)
{
    DismantlingProjection p;
    p.sigma = vertex_from(field(j, "sigma"), "projection sigma");
    const Json& table = field(j, "table");
    if (!table.is_object())
        bad("projection table: expected an object keyed by vertex id");
    for (const auto& [key, row] : table.items()) {
        Vertex rho = 0;
        try {
            std::size_t used = 0;
            rho = std::stoll(key, &used);
            if (used != key.size())
                bad("projection table key '" + key + "' is not a vertex id");
        } catch (const std::logic_error&) {
            bad("projection table key '" + key + "' is not a vertex id");
        }
        p.table[rho] = pairs_from(row);
    }
    return p;
}

Json to_json(const DismantlingProjection& p)
{
    Json table = Json::object();
    for (const auto& [rho, pairs] : p.table) {
        Json row = Json::array();
        for (const auto& pr : pairs)
            row.push_back({pr.first, pr.second});
        table[std::to_string(rho)] = std::move(row);
    }
    return Json{{"sigma", p.sigma}, {"table", std::move(table)}};
}

ProjectionFamily family_from_json(const Json& j)
{
    const Json& list = j.is_array() ? j : field(j, "projections");
    if (!list.is_array())
        bad("projection family: expected an array of projections");
    ProjectionFamily fam;
    for (const auto& p : list) {
        auto proj = projection_from_json(p);
        const Vertex s = proj.sigma;
        if (!fam.members.emplace(s, std::move(proj)).second)
            bad("projection family has two members with base " + std::to_string(s));
    }
    return fam;
}

Json to_json(const ProjectionFamily& f)
{
    Json list = Json::array();
    for (const auto& [s, p] : f.members)
        list.push_back(to_json(p));
    return Json{{"projections", std::move(list)}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    const Json& faces = field(j, "maximal_faces");
    if (!faces.is_array())
        bad("maximal_faces: expected an array");
    std::vector<Face> out;
    for (const auto& f : faces)
        out.push_back(vertices_from(f, "face"));
    return SimplicialComplex(std::move(out));
}

Json to_json(const SimplicialComplex& k)
{
    return Json{{"maximal_faces", k.maximal_faces()}};
}

Json to_json(const ReducedBetti& b)
{
    return Json(b.values);
}

Json to_json(const ExposureReport& r)
{
    Json failures = Json::array();
    for (const auto& s : r.failures)
        failures.push_back(to_json(s));
    return Json{{"mode", r.label()},
                {"tested", r.tested},
                {"failure_count", r.failure_count},
                {"passed", r.passed()},
                {"failures", std::move(failures)}};
}

Json to_json(const InvariantCliqueResult& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json step{{"kind", to_string(s.kind)}, {"vertices", s.vertex_count}};
        if (s.kind == CliqueStepKind::remove_dominated)
            step["removed"] = to_json(s.removed);
        if (s.kind == CliqueStepKind::quotient) {
            Json classes = Json::array();
            for (const auto& c : s.classes)
                classes.push_back(to_json(c));
            step["classes"] = std::move(classes);
        }
        steps.push_back(std::move(step));
    }
    return Json{{"clique", to_json(r.clique)}, {"steps", std::move(steps)}};
}

Json to_json(const ReductionCertificate& c)
{
    Json stages = Json::array();
    for (const auto& s : c.stages) {
        Json st{{"kind", to_string(s.kind)},
                {"vertices", s.graph.vertices()},
                {"group", to_json(s.group)},
                {"fixed_vertices", s.fixed_vertices},
                {"fixed_homology", to_json(s.fixed_homology)}};
        if (s.kind == ReductionKind::remove_dominated) {
            st["removed"] = to_json(s.removed);
            Json dom = Json::array();
            for (const auto& d : s.dom)
                dom.push_back({{"vertex", d.base}, {"dom", to_json(d.vertices)}});
            st["dom_simplices"] = std::move(dom);
        }
        if (s.kind == ReductionKind::quotient) {
            Json classes = Json::array();
            for (const auto& cl : s.classes)
                classes.push_back(to_json(cl));
            st["classes"] = std::move(classes);
        }
        stages.push_back(std::move(st));
    }
    return Json{{"stages", std::move(stages)}};
}

Json to_json(const HyperbolicityReport& r)
{
    const auto& w = r.witness;
    return Json{{"delta", r.delta},
                {"exact", r.exact},
                {"witness",
                 {{"u", w.u}, {"v", w.v}, {"w", w.w}, {"t", w.t}, {"uv", w.uv}, {"vw", w.vw}, {"wu", w.wu}}},
                {"max_geodesics_per_pair", r.max_geodesics_per_pair},
                {"capped_pairs", r.capped_pairs}};
}

Json to_json(const QuasiCentre& q)
{
    return Json{{"centre", to_json(q.centre)}, {"radius", q.radius}};
}

Json to_json(const ClaimReport& r)
{
    Json neighbours = Json::array();
    for (const auto& nb : r.neighbours)
        neighbours.push_back({{"t", nb.t},
                              {"case", nb.proof_case},
                              {"u_prime", nb.u_prime},
                              {"d_tu", nb.d_tu},
                              {"bound", nb.bound},
                              {"chain", nb.chain}});
    return Json{{"v", r.v},
                {"w", r.w},
                {"u", r.u},
                {"a", r.a},
                {"centre_diameter", r.centre_diameter},
                {"geodesic_vw", r.geodesic_vw},
                {"ball_size", r.ball_size},
                {"dominated", true},
                {"neighbours", std::move(neighbours)}};
}

Json to_json(const RipsBallResult& r)
{
    Json claims = Json::array();
    for (const auto& c : r.claims)
        claims.push_back(to_json(c));
    return Json{{"branch", to_string(r.branch)},
                {"ball", to_json(r.ball)},
                {"trace", to_json(r.trace)},
                {"claims", std::move(claims)}};
}

Json to_json(const ProjectionCliqueResult& r)
{
    return Json{{"hypothesis", to_string(r.hypothesis)},
                {"base", r.base},
                {"orbit_set", to_json(r.orbit_set)},
                {"trace", to_json(r.trace)},
                {"clique", to_json(r.clique)}};
}

std::string to_dot(const Graph& g)
{
    std::string out = "graph G {\n";
    for (Vertex v : g.vertices())
        out += "  " + std::to_string(v) + ";\n";
    for (const auto& [a, b] : g.edges())
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    return out + "}\n";
}

} // namespace dismantle
