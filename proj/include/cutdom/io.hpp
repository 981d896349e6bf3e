#pragma once

// JSON encodings of graphs, weight vectors, certificates and minor models.
//
//   graph    {"nodes": 6, "edges": [[0, 1], [1, 2], ...]}
//   weights  {"weights": {"0": "1/2", "3": "1"}}   missing edges weigh 0
//
// Rationals are written as "p/q" or "p" strings.

#include "cutdom/cutspace.hpp"
#include "cutdom/graph.hpp"
#include "cutdom/minors.hpp"
#include "cutdom/polyhedron.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace cutdom {

using Json = nlohmann::json;

/// Throws IoError if the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

/// Throws IoError on malformed input (including invalid endpoints).
Multigraph graph_from_json(const Json& j);
Json to_json(const Multigraph& g);

/// Accepts {"weights": {...}} or a bare {"index": "value"} object. Throws
/// IoError on unknown edge indices, unparsable or negative values.
RatVector weights_from_json(const Json& j, int edge_count);
Json weights_to_json(const RatVector& c);

Json to_json(const RatVector& v);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const LaminarFamily& family);
Json to_json(const FacetCertificate& cert);
Json to_json(const StructuralReport& report);
Json to_json(const MinorModel& model);
MinorModel minor_model_from_json(const Json& j);
Json to_json(const VRep& vrep);
Json to_json(const EfReport& report);

std::string to_string(FacetStatus status);

}  // namespace cutdom
