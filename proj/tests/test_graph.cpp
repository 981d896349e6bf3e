#include "cutdom/catalog.hpp"
#include "cutdom/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

using namespace cutdom;

TEST(Multigraph, ValidatesConstruction)
{
    EXPECT_THROW(Multigraph(1, {}), std::invalid_argument);
    EXPECT_THROW(Multigraph(3, {{0, 3}}), std::invalid_argument);
    const Multigraph g(3, {{0, 1}, {0, 1}, {2, 2}});
    EXPECT_FALSE(g.is_simple());
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_EQ(g.degree(2), 2);
    EXPECT_EQ(g.neighbors(2), 0u);
}

TEST(Minors, ContractionMergesEndpointsAndKeepsParallelEdges)
{
    const auto r = contract(graphs::cycle(3), 0);
    EXPECT_EQ(r.graph.node_count(), 2);
    EXPECT_EQ(r.graph.edge_count(), 2);
    EXPECT_FALSE(r.graph.is_simple());
    EXPECT_FALSE(r.edge_map[0].has_value());
    EXPECT_EQ(r.node_map[0], r.node_map[1]);
    EXPECT_EQ(simplify(r.graph).graph.edge_count(), 1);
}

TEST(Minors, ContractingALoopDeletesIt)
{
    const Multigraph g(2, {{0, 1}, {1, 1}});
    const auto r = contract(g, 1);
    EXPECT_EQ(r.graph.node_count(), 2);
    EXPECT_EQ(r.graph.edge_count(), 1);
}

TEST(Minors, RefusesToShrinkBelowTwoNodes)
{
    EXPECT_THROW(contract(graphs::complete(2), 0), std::invalid_argument);
    EXPECT_THROW(delete_node(graphs::complete(2), 0), std::invalid_argument);
}

TEST(Minors, DeleteNodeRemovesIncidentEdges)
{
    const auto r = delete_node(graphs::prism(), 0);
    EXPECT_EQ(r.graph.node_count(), 5);
    EXPECT_EQ(r.graph.edge_count(), 6);
    EXPECT_EQ(r.node_map[0], -1);
    EXPECT_EQ(r.node_map[1], 0);
}

TEST(Minors, TraceReachesK4FromPyramid)
{
    const MinorTrace t{{MinorStep::Kind::contract, 0}, {MinorStep::Kind::contract, 1}, {MinorStep::Kind::contract, 2}};
    const auto r = apply_trace(graphs::pyramid(), t);
    EXPECT_EQ(r.graph.node_count(), 4);
    EXPECT_EQ(canonical_form(simplify(r.graph).graph), canonical_form(graphs::complete(4)));
}

TEST(Connectivity, Basics)
{
    EXPECT_TRUE(is_connected(graphs::prism()));
    EXPECT_FALSE(is_connected(graphs::two_triangles()));
    EXPECT_EQ(component_count(graphs::two_triangles()), 2);
    EXPECT_TRUE(is_two_connected(graphs::prism()));
    EXPECT_FALSE(is_two_connected(graphs::path(4)));
    EXPECT_TRUE(induces_connected(graphs::path(4), 0b0110));
    EXPECT_FALSE(induces_connected(graphs::path(4), 0b1001));
}

TEST(Blocks, PathAndBowtie)
{
    const auto p = blocks(graphs::path(4));
    EXPECT_EQ(p.blocks.size(), 3u);
    EXPECT_EQ(p.cutnodes, (std::vector<NodeId>{1, 2}));

    const Multigraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto b = blocks(bowtie);
    EXPECT_EQ(b.blocks.size(), 2u);
    EXPECT_EQ(b.cutnodes, (std::vector<NodeId>{2}));
    for (const auto& blk : b.blocks) EXPECT_EQ(blk.edges.size(), 3u);

    EXPECT_THROW(blocks(graphs::two_triangles()), std::invalid_argument);
}

TEST(TwoCutsets, PyramidSeparatesEachSubdivisionNode)
{
    const auto cuts = two_cutsets(graphs::pyramid());
    const std::vector<std::pair<NodeId, NodeId>> expected{{0, 4}, {0, 5}, {0, 6}};
    EXPECT_EQ(cuts, expected);
    EXPECT_TRUE(two_cutsets(graphs::prism()).empty());
}

TEST(Simplify, MapsParallelClasses)
{
    const Multigraph g(3, {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
    const auto s = simplify(g);
    EXPECT_EQ(s.graph.edge_count(), 2);
    EXPECT_EQ(s.multiplicity, (std::vector<int>{2, 1}));
    EXPECT_EQ(s.edge_map[0], s.edge_map[1]);
    EXPECT_FALSE(s.edge_map[3].has_value());
}

TEST(Relabel, PermutesNodesAndEdges)
{
    const auto g = graphs::path(3);
    const std::vector<NodeId> perm{2, 0, 1};
    const std::vector<EdgeId> order{1, 0};
    const auto h = relabel(g, perm, order);
    EXPECT_EQ(h.edge(0), (Edge{0, 1}));
    EXPECT_EQ(h.edge(1), (Edge{2, 0}));
}

TEST(InducedSubgraph, ReportsEdgeOrigins)
{
    std::vector<EdgeId> origin;
    const std::vector<NodeId> nodes{3, 4, 5};
    const auto h = induced_subgraph(graphs::prism(), nodes, &origin);
    EXPECT_EQ(h.edge_count(), 3);
    EXPECT_EQ(origin, (std::vector<EdgeId>{3, 4, 5}));
}
