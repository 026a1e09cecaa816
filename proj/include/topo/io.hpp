#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "topo/complex.hpp"
#include "topo/edge_path.hpp"
#include "topo/poset.hpp"

namespace topo {

using Json = nlohmann::json;

/// A complex read from JSON together with the map from the ids used in the
/// file to the dense ids used internally.
struct LoadedComplex {
    SimplicialComplex complex;
    std::map<long long, VertexId> ids;

    VertexId vertex(long long original) const;
};

struct Document {
    std::optional<LoadedComplex> complex;
    std::optional<SimplicialPoset> poset;

    bool is_poset() const { return poset.has_value(); }
};

// Complex format:
//   {"type":"complex","facets":[[0,1,2],...],"coloring":{"0":1,...},"labels":{"0":"a",...}}
// Vertex ids are renumbered densely in ascending order; a renumbered vertex
// without a label gets its original id as label.
Json complex_to_json(const SimplicialComplex& complex);
LoadedComplex complex_from_json(const Json& json);

// Poset format:
//   {"type":"poset","elements":[{"id":0,"rank":1,"label":"u"},...],
//    "covers":[[0,2],...],"coloring":{"0":1,...}}
Json poset_to_json(const SimplicialPoset& poset);
SimplicialPoset poset_from_json(const Json& json);

Document parse_document(const std::string& text);
Document load_document(const std::string& path);

Json certificate_to_json(const EquivalenceCertificate& certificate);
EquivalenceCertificate certificate_from_json(const Json& json);

Json poset_certificate_to_json(const PosetCertificate& certificate);

} // namespace topo
