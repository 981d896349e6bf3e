#include "cutdom/catalog.hpp"
#include "cutdom/errors.hpp"
#include "cutdom/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace cutdom;

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(CUTDOM_FIXTURE_DIR) / name; }

Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(Io, GraphRoundTripKeepsEdgeOrderLoopsAndParallels)
{
    const Multigraph g(3, {{0, 1}, {1, 2}, {1, 2}, {2, 2}});
    EXPECT_EQ(graph_from_json(to_json(g)), g);
    EXPECT_EQ(graph_from_json(Json::parse(to_json(g).dump())), g);
}

TEST(Io, RejectsMalformedGraphs)
{
    EXPECT_THROW(graph_from_json(Json::parse(R"({"nodes": 2, "edges": [[0, 2]]})")), IoError);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"nodes": 1, "edges": []})")), IoError);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": [[0, 1]]})")), IoError);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"nodes": 2, "edges": [[0]]})")), IoError);
}

TEST(Io, WeightsAcceptWrappedAndBareObjectsAndDefaultToZero)
{
    const auto wrapped = weights_from_json(Json::parse(R"({"weights": {"0": "1/2", "2": "3"}})"), 4);
    const RatVector expected{frac(1, 2), 0, 3, 0};
    EXPECT_EQ(wrapped, expected);
    EXPECT_EQ(weights_from_json(Json::parse(R"({"0": "1/2", "2": "3"})"), 4), expected);
    EXPECT_EQ(weights_from_json(weights_to_json(expected), 4), expected);
}

TEST(Io, WeightsAreStoredReduced)
{
    const auto c = weights_from_json(Json::parse(R"({"weights": {"0": "2/4", "1": "6/3"}})"), 2);
    EXPECT_EQ(c[0], frac(1, 2));
    EXPECT_EQ(c[1], 2);
    EXPECT_EQ(weights_to_json(c)["weights"]["0"], "1/2");
    EXPECT_EQ(weights_to_json(c)["weights"]["1"], "2");
}

TEST(Io, RejectsBadWeights)
{
    EXPECT_THROW(weights_from_json(Json::parse(R"({"weights": {"5": "1"}})"), 3), IoError);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"weights": {"x": "1"}})"), 3), IoError);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"weights": {"0": "-1"}})"), 3), IoError);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"weights": {"0": "1/0"}})"), 3), IoError);
}

TEST(Io, ReadsShippedFixtures)
{
    const auto prism = graph_from_json(read_json_file(fixture("prism.json")));
    EXPECT_EQ(canonical_form(prism), canonical_form(graphs::prism()));
    const auto pyramid = graph_from_json(read_json_file(fixture("pyramid.json")));
    EXPECT_EQ(canonical_form(pyramid), canonical_form(graphs::pyramid()));
    const auto m1 = graph_from_json(read_json_file(fixture("m1.json")));
    EXPECT_EQ(canonical_form(m1), canonical_form(graphs::m1()));
    const auto c = weights_from_json(read_json_file(fixture("prism_weights.json")), prism.edge_count());
    EXPECT_EQ(c.size(), 9u);
}

TEST(Io, MissingFileIsAnIoError)
{
    EXPECT_THROW(read_json_file(fixture("no_such_file.json")), IoError);
}

TEST(Io, FileRoundTrip)
{
    const auto path = std::filesystem::temp_directory_path() / "cutdom_io_roundtrip.json";
    write_json_file(path, to_json(graphs::prism()));
    EXPECT_EQ(graph_from_json(read_json_file(path)), graphs::prism());
    std::filesystem::remove(path);
}

TEST(Io, MinorModelRoundTrip)
{
    const MinorModel model{{{0, 1}, {2}, {3, 4, 5}}, {0, 3, 7}};
    const auto back = minor_model_from_json(to_json(model));
    EXPECT_EQ(back.branch_sets, model.branch_sets);
    EXPECT_EQ(back.edge_witness, model.edge_witness);
}

TEST(Io, CertificateCarriesRationalStringsAndMinimumIntegerForm)
{
    const auto g = graphs::prism();
    const auto c = weights_from_json(read_json_file(fixture("prism_weights.json")), g.edge_count());
    const auto j = to_json(certify_facet(g, c));
    EXPECT_EQ(j["lambda"], "4");
    EXPECT_EQ(j["status"], "facet");
    EXPECT_EQ(j["is_facet"], true);
    EXPECT_EQ(j["min_int_rhs"], "4");
    EXPECT_EQ(j["family"].size(), 9u);
    EXPECT_EQ(rat_vector_from_json(j["weights"]), c);
}
