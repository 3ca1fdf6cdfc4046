#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dismantle/dismantling.hpp"
#include "dismantle/flag_complex.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/group.hpp"
#include "dismantle/hyperbolic.hpp"
#include "dismantle/invariant_clique.hpp"
#include "dismantle/projection.hpp"

namespace dismantle {

/// Insertion-ordered so that reports serialise byte-identically.
using Json = nlohmann::ordered_json;

/// Parse errors and schema violations surface as Error(invalid_input).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// {"vertices":[...],"edges":[[a,b],...]}; "vertices" may also be a count n
/// meaning 0..n-1.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

VertexSet vertex_set_from_json(const Json& j);
Json to_json(const VertexSet& s);

/// A permutation is the list of images of the domain in increasing order
/// (for ids 0..n-1, entry i is the image of i).
Permutation permutation_from_json(const Json& j, const std::vector<Vertex>& domain);
Json to_json(const Permutation& p);

/// {"generators":[perm,...]}, optionally with "order". Generators are
/// checked to be automorphisms of g.
PermutationGroup group_from_json(const Json& j, const Graph& g);
Json to_json(const PermutationGroup& h);

/// {"order":[...],"witnesses":[...]}
DismantlingTrace trace_from_json(const Json& j);
Json to_json(const DismantlingTrace& t);

/// {"sigma":s,"table":{"rho":[[a,b],...],...}}
DismantlingProjection projection_from_json(const Json& j);
Json to_json(const DismantlingProjection& p);

/// {"projections":[projection,...]} or a bare array of projections.
ProjectionFamily family_from_json(const Json& j);
Json to_json(const ProjectionFamily& f);

/// {"maximal_faces":[[...],...]}
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& k);

Json to_json(const ReducedBetti& b);
Json to_json(const ExposureReport& r);
Json to_json(const InvariantCliqueResult& r);
Json to_json(const ReductionCertificate& c);
Json to_json(const HyperbolicityReport& r);
Json to_json(const QuasiCentre& q);
Json to_json(const ClaimReport& r);
Json to_json(const RipsBallResult& r);
Json to_json(const ProjectionCliqueResult& r);

/// Graphviz rendering, vertices by id.
std::string to_dot(const Graph& g);

} // namespace dismantle
