#pragma once

// Multigraphs with positional edge ids, minor operations and connectivity.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cutdom {

using NodeId = int;
using EdgeId = int;

/// Bitmask over node ids; graphs handled by the exhaustive routines have at
/// most 32 nodes.
using NodeSet = std::uint32_t;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    bool is_loop() const { return u == v; }
    NodeId other(NodeId w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Multigraph {
public:
    /// Throws std::invalid_argument unless node_count >= 2 and every
    /// endpoint is a valid node id.
    Multigraph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const { return edges_; }

    /// Edge ids incident to v (a loop appears once).
    std::vector<EdgeId> incident(NodeId v) const;
    int degree(NodeId v) const;
    NodeSet all_nodes() const { return node_count_ >= 32 ? ~NodeSet{0} : (NodeSet{1} << node_count_) - 1; }
    /// Neighbor mask of v, ignoring loops; requires node_count <= 32.
    NodeSet neighbors(NodeId v) const;
    bool has_edge_between(NodeId a, NodeId b) const;
    bool is_simple() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int node_count_;
    std::vector<Edge> edges_;
};

/// Result of a minor operation. `edge_map[old]` is the new id of an old edge
/// (nullopt if it vanished); `node_map[old]` the new id of an old node (-1 if
/// deleted).
struct MinorResult {
    Multigraph graph;
    std::vector<std::optional<EdgeId>> edge_map;
    std::vector<NodeId> node_map;
};

/// Identifies the endpoints of e. Contracting a loop deletes it. Throws
/// std::invalid_argument if fewer than two nodes would remain.
MinorResult contract(const Multigraph& g, EdgeId e);
MinorResult delete_edge(const Multigraph& g, EdgeId e);
/// Removes all edges at v, then v itself. Throws if fewer than two nodes remain.
MinorResult delete_node(const Multigraph& g, NodeId v);

struct MinorStep {
    enum class Kind { contract, delete_edge, delete_node };
    Kind kind;
    int id;
};

using MinorTrace = std::vector<MinorStep>;

/// Applies the steps in order; ids refer to the graph state at each step.
MinorResult apply_trace(const Multigraph& g, const MinorTrace& trace);

struct Simplification {
    Multigraph graph;
    /// Original edge id kept for each simple edge.
    std::vector<EdgeId> representative;
    /// Size of each parallel class (indexed by simple edge id).
    std::vector<int> multiplicity;
    /// Original edge -> simple edge; nullopt for loops.
    std::vector<std::optional<EdgeId>> edge_map;
};

/// Drops loops and keeps the lowest-id edge of each parallel class.
Simplification simplify(const Multigraph& g);

int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// Connectivity of the subgraph induced by the nodes in `nodes` (empty counts as connected).
bool induces_connected(const Multigraph& g, NodeSet nodes);
/// Connectivity of (V, edges) as a spanning subgraph.
bool spans_connected(const Multigraph& g, std::span<const EdgeId> edges);
bool is_two_connected(const Multigraph& g);

struct Block {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<NodeId> cutnodes;
};

/// Block-cutnode decomposition of a connected graph. Loops form single-node
/// blocks of their own. Throws std::invalid_argument on disconnected input.
BlockDecomposition blocks(const Multigraph& g);

/// All node pairs {u,v}, u < v, whose removal leaves a disconnected graph.
std::vector<std::pair<NodeId, NodeId>> two_cutsets(const Multigraph& g);

/// Subgraph on all nodes keeping the listed edges, in the given order.
Multigraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges);

/// Subgraph induced by `nodes`, relabelled in increasing id order; the
/// optional outputs receive new->old node and edge ids.
Multigraph induced_subgraph(const Multigraph& g, std::span<const NodeId> nodes,
                            std::vector<EdgeId>* edge_origin = nullptr);

/// Applies a node relabelling (perm[old] = new) and an edge order
/// (edge_order[new] = old).
Multigraph relabel(const Multigraph& g, std::span<const NodeId> perm, std::span<const EdgeId> edge_order);

}  // namespace cutdom
