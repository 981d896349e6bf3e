#include "cutdom/catalog.hpp"
#include "cutdom/cutspace.hpp"
#include "cutdom/errors.hpp"

#include "oracle/oracle.hpp"

#include "test_seed.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace cutdom;

namespace {

RatVector weights(std::initializer_list<long> xs)
{
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RatVector prism_weights() { return weights({1, 1, 1, 1, 1, 1, 2, 2, 2}); }
RatVector pyramid_weights() { return weights({2, 2, 2, 2, 2, 2, 1, 1, 1}); }

std::size_t oracle_rank_on_support(const Multigraph& g, const RatVector& c, const std::vector<NodeSet>& sides)
{
    std::vector<RatVector> rows;
    for (NodeSet s : sides) {
        RatVector r;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (c[e] == 0) continue;
            const auto& ed = g.edge(e);
            r.emplace_back(((s >> ed.u & 1u) != (s >> ed.v & 1u)) ? 1 : 0);
        }
        rows.push_back(r);
    }
    return oracle::naive_rank(rows);
}

}  // namespace

TEST(Cuts, EnumerationCoversEveryShorePairOnce)
{
    const auto g = graphs::prism();
    const auto cuts = enumerate_proper_cuts(g);
    EXPECT_EQ(cuts.size(), 31u);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        EXPECT_EQ(cuts[i].side & 1u, 0u);
        if (i > 0) EXPECT_LE(std::popcount(cuts[i - 1].side), std::popcount(cuts[i].side));
    }
    EXPECT_EQ(make_cut(g, 0b111110), make_cut(g, 0b000001));
    EXPECT_THROW(make_cut(g, 0), std::invalid_argument);
    EXPECT_THROW(make_cut(g, 0b111111), std::invalid_argument);
}

TEST(Cuts, LambdaMatchesBruteForce)
{
    std::mt19937 rng(test_seed(29));
    for (const auto& g : generate_catalog(5, 10)) {
        RatVector c(static_cast<std::size_t>(g.edge_count()));
        for (auto& x : c) x = Rational(static_cast<long>(rng() % 5), static_cast<long>(1 + rng() % 3)), x.canonicalize();
        EXPECT_EQ(lambda(g, c), oracle::min_cut_value(g, c));
        for (const auto& cut : minimum_cuts(g, c)) EXPECT_EQ(oracle::cut_value(g, c, cut.side), lambda(g, c));
    }
}

TEST(Cuts, RejectsBadWeights)
{
    EXPECT_THROW(lambda(graphs::path(3), weights({1})), std::invalid_argument);
    EXPECT_THROW(lambda(graphs::path(3), weights({1, -1})), std::invalid_argument);
}

TEST(Cuts, PrismMinimumCutsAreSingletonsAndMatchingPairs)
{
    const auto g = graphs::prism();
    const auto mins = minimum_cuts(g, prism_weights());
    EXPECT_EQ(lambda(g, prism_weights()), 4);
    ASSERT_EQ(mins.size(), 9u);
    std::vector<NodeSet> shores;
    for (const auto& cut : mins) shores.push_back(small_shore(g, cut.side));
    std::sort(shores.begin(), shores.end());
    const std::vector<NodeSet> expected{0b1, 0b10, 0b100, 0b1000, 0b1001, 0b10000, 0b10010, 0b100000, 0b100100};
    EXPECT_EQ(shores, expected);
}

TEST(LaminarBasis, IsLaminarIndependentAndSpanning)
{
    std::mt19937 rng(test_seed(31));
    for (const auto& g : generate_catalog(6, 9)) {
        for (int trial = 0; trial < 3; ++trial) {
            RatVector c(static_cast<std::size_t>(g.edge_count()));
            for (auto& x : c) x = Rational(static_cast<long>(1 + rng() % 2));
            const auto mins = minimum_cuts(g, c);
            const auto fam = laminar_basis(g, c, mins);
            EXPECT_TRUE(fam.is_laminar());
            for (NodeSet s : fam.sets) EXPECT_EQ(oracle::cut_value(g, c, s), lambda(g, c));
            std::vector<NodeSet> all;
            for (const auto& cut : mins) all.push_back(cut.side);
            EXPECT_EQ(oracle_rank_on_support(g, c, fam.sets), fam.size());
            EXPECT_EQ(oracle_rank_on_support(g, c, all), fam.size());
        }
    }
}

TEST(LaminarBasis, UncrossesTheFourCycle)
{
    // All six two-edge cuts of C4 are minimum; {0,1} and {1,2} cross.
    const auto g = graphs::cycle(4);
    const auto c = weights({1, 1, 1, 1});
    const auto fam = laminar_basis(g, c, minimum_cuts(g, c));
    EXPECT_TRUE(fam.is_laminar());
    EXPECT_EQ(fam.size(), 4u);
}

TEST(CertifyFacet, PrismAndPyramid)
{
    for (const auto& [g, c] : {std::pair{graphs::prism(), prism_weights()}, std::pair{graphs::pyramid(), pyramid_weights()}}) {
        const auto cert = certify_facet(g, c);
        EXPECT_TRUE(cert.is_facet());
        EXPECT_EQ(cert.lambda, 4);
        EXPECT_EQ(cert.family.size(), 9u);
        EXPECT_TRUE(cert.family.is_laminar());
        EXPECT_EQ(cert.min_int_rhs(), 4);
        EXPECT_TRUE(is_witness(g, c, 2));
        EXPECT_FALSE(is_witness(g, c, 4));
    }
}

TEST(CertifyFacet, SmallGraphs)
{
    const auto k2 = certify_facet(graphs::complete(2), weights({1}));
    EXPECT_TRUE(k2.is_facet());
    EXPECT_EQ(k2.min_int_rhs(), 1);

    const auto k3 = certify_facet(graphs::complete(3), weights({1, 1, 1}));
    EXPECT_TRUE(k3.is_facet());
    EXPECT_EQ(k3.lambda, 2);
    EXPECT_EQ(k3.min_int_rhs(), 2);

    // Support is a spanning path: a facet with right-hand side 1.
    const auto path = certify_facet(graphs::complete(3), weights({1, 1, 0}));
    EXPECT_TRUE(path.is_facet());
    EXPECT_EQ(path.lambda, 1);
    EXPECT_EQ(path.min_int_rhs(), 1);
    EXPECT_TRUE(odd_rhs_property_holds(graphs::complete(3), path));

    const auto zero = certify_facet(graphs::complete(3), weights({1, 0, 0}));
    EXPECT_EQ(zero.status, FacetStatus::zero_lambda);
    EXPECT_EQ(zero.lambda, 0);
    EXPECT_FALSE(zero.is_facet());

    // Tight cuts: the six singletons and the two triangles.
    const auto ones = weights({1, 1, 1, 1, 1, 1, 1, 1, 1});
    const auto flat = certify_facet(graphs::prism(), ones);
    EXPECT_EQ(flat.status, FacetStatus::not_facet);
    EXPECT_EQ(flat.lambda, 3);
    EXPECT_EQ(flat.rank, oracle_rank_on_support(graphs::prism(), ones, {1, 2, 4, 8, 16, 32, 7}));
    EXPECT_LT(flat.rank, 9u);
}

TEST(CertifyFacet, InvariantUnderRescalingAndEdgePermutation)
{
    std::mt19937 rng(test_seed(37));
    const auto g = graphs::prism();
    const auto base = certify_facet(g, prism_weights());
    for (int trial = 0; trial < 10; ++trial) {
        Rational t(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9));
        t.canonicalize();
        RatVector c = prism_weights();
        for (auto& x : c) x *= t;
        const auto scaled = certify_facet(g, c);
        EXPECT_EQ(scaled.status, base.status);
        EXPECT_EQ(scaled.min_int_form, base.min_int_form);
        EXPECT_EQ(scaled.lambda, Rational(base.lambda * t));

        std::vector<EdgeId> order(9);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<NodeId> ident(6);
        std::iota(ident.begin(), ident.end(), 0);
        const auto h = relabel(g, ident, order);
        RatVector pc(9);
        for (int e = 0; e < 9; ++e) pc[e] = prism_weights()[order[e]];
        const auto permuted = certify_facet(h, pc);
        EXPECT_TRUE(permuted.is_facet());
        EXPECT_EQ(permuted.min_int_rhs(), 4);
    }
}

TEST(CertifyFacet, SizeGuard)
{
    EXPECT_THROW(certify_facet(graphs::path(25), RatVector(24, Rational(1))), SizeGuardError);
}

TEST(OddRhs, FailsForOddRhsAboveOne)
{
    FacetCertificate cert;
    cert.status = FacetStatus::facet;
    cert.min_int_form.rhs = 3;
    EXPECT_FALSE(odd_rhs_property_holds(graphs::complete(3), cert));
}

TEST(Levels, NestingDepth)
{
    LaminarFamily fam{{0b1, 0b10, 0b11, 0b111, 0b1000}};
    EXPECT_EQ(levels(fam), (std::vector<int>{0, 0, 1, 2, 0}));
}

TEST(StructuralReport, PrismAndPyramidWitnesses)
{
    for (const auto& [g, c] : {std::pair{graphs::prism(), prism_weights()}, std::pair{graphs::pyramid(), pyramid_weights()}}) {
        const auto cert = certify_facet(g, c);
        const auto report = structural_report(g, c, 2, cert.family);
        for (const auto& check : report.checks) EXPECT_TRUE(!check.applicable || check.passed) << check.name << ": " << check.detail;
        EXPECT_TRUE(report.all_passed());
        ASSERT_NE(report.find("half_integral"), nullptr);
        EXPECT_TRUE(report.find("half_integral")->applicable);
    }
    const auto pyr = structural_report(graphs::pyramid(), pyramid_weights(), 2, certify_facet(graphs::pyramid(), pyramid_weights()).family);
    EXPECT_TRUE(pyr.find("two_cutset_shape")->passed);
}

TEST(StructuralReport, FlagsViolations)
{
    // Triangle edges too heavy for k = 2 after rescaling.
    const auto g = graphs::prism();
    const auto c = weights({3, 3, 3, 3, 3, 3, 1, 1, 1});
    const auto report = structural_report(g, c, 2, certify_facet(g, c).family);
    EXPECT_FALSE(report.all_passed());
    EXPECT_FALSE(report.find("half_integral")->passed);
}
