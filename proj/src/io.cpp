#include "cutdom/io.hpp"

#include "cutdom/errors.hpp"

#include <fstream>

namespace cutdom {

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& value)
{
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << value.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

Multigraph graph_from_json(const Json& j)
{
    try {
        const int n = j.at("nodes").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw IoError("each edge must be a pair of node ids");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return Multigraph(n, std::move(edges));
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed graph: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("malformed graph: ") + e.what());
    }
}

Json to_json(const Multigraph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"nodes", g.node_count()}, {"edges", edges}};
}

RatVector weights_from_json(const Json& j, int edge_count)
{
    const Json& map = j.contains("weights") ? j.at("weights") : j;
    if (!map.is_object()) throw IoError("weights must be an object keyed by edge index");
    RatVector c(static_cast<std::size_t>(edge_count), Rational(0));
    for (const auto& [key, value] : map.items()) {
        std::size_t pos = 0;
        int e = -1;
        try {
            e = std::stoi(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size() || e < 0 || e >= edge_count) throw IoError("weight key '" + key + "' is not an edge index");
        try {
            c[e] = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long>());
        } catch (const std::exception& ex) {
            throw IoError("weight for edge " + key + ": " + ex.what());
        }
        if (c[e] < 0) throw IoError("weight for edge " + key + " is negative");
    }
    return c;
}

Json weights_to_json(const RatVector& c)
{
    Json map = Json::object();
    for (std::size_t e = 0; e < c.size(); ++e) map[std::to_string(e)] = to_string(c[e]);
    return {{"weights", map}};
}

Json to_json(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

RatVector rat_vector_from_json(const Json& j)
{
    RatVector v;
    try {
        for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    } catch (const std::exception& e) {
        throw IoError(std::string("malformed rational vector: ") + e.what());
    }
    return v;
}

Json to_json(const LaminarFamily& family)
{
    Json out = Json::array();
    for (NodeSet s : family.sets) {
        Json set = Json::array();
        for (int v = 0; v < 32; ++v)
            if (s >> v & 1u) set.push_back(v);
        out.push_back(set);
    }
    return out;
}

std::string to_string(FacetStatus status)
{
    switch (status) {
    case FacetStatus::facet: return "facet";
    case FacetStatus::not_facet: return "not_facet";
    case FacetStatus::zero_lambda: return "zero_lambda";
    }
    return "unknown";
}

Json to_json(const FacetCertificate& cert)
{
    Json out{
        {"weights", to_json(cert.weight)},
        {"lambda", to_string(cert.lambda)},
        {"support", cert.support},
        {"family", to_json(cert.family)},
        {"rank", cert.rank},
        {"is_facet", cert.is_facet()},
        {"status", to_string(cert.status)},
        {"min_int_form", {{"coefficients", Json::array()}, {"rhs", to_string(cert.min_int_form.rhs)}}},
        {"min_int_rhs", to_string(cert.min_int_rhs())},
    };
    for (const auto& x : cert.min_int_form.coefficients) out["min_int_form"]["coefficients"].push_back(to_string(x));
    if (cert.witness_for_k) out["witness_for_k"] = *cert.witness_for_k;
    return out;
}

Json to_json(const StructuralReport& report)
{
    Json checks = Json::object();
    for (const auto& c : report.checks) {
        Json entry{{"applicable", c.applicable}, {"passed", c.passed}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks[c.name] = entry;
    }
    return {{"all_passed", report.all_passed()}, {"checks", checks}};
}

Json to_json(const MinorModel& model)
{
    return {{"branch_sets", model.branch_sets}, {"edge_witness", model.edge_witness}};
}

MinorModel minor_model_from_json(const Json& j)
{
    try {
        return {j.at("branch_sets").get<std::vector<std::vector<NodeId>>>(), j.at("edge_witness").get<std::vector<EdgeId>>()};
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed minor model: ") + e.what());
    }
}

Json to_json(const VRep& vrep)
{
    Json vertices = Json::array(), rays = Json::array();
    for (const auto& v : vrep.vertices) vertices.push_back(to_json(v));
    for (const auto& r : vrep.rays) rays.push_back(to_json(r));
    return {{"vertices", vertices}, {"rays", rays}};
}

Json to_json(const EfReport& report)
{
    return {
        {"holds", report.holds},
        {"root", report.root},
        {"arborescences", report.arborescences},
        {"lifted_vertices", report.lifted_vertices},
        {"projected_vertices", report.projected_vertices},
        {"problems", report.problems},
    };
}

}  // namespace cutdom
