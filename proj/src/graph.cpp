#include "cutdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cutdom {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

int count_components(int n, std::span<const Edge> edges, NodeSet removed = 0)
{
    UnionFind uf(n);
    int comps = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed >> v & 1u)) ++comps;
    for (const auto& e : edges) {
        if ((removed >> e.u & 1u) || (removed >> e.v & 1u)) continue;
        if (uf.unite(e.u, e.v)) --comps;
    }
    return comps;
}

}  // namespace

Multigraph::Multigraph(int node_count, std::vector<Edge> edges) : node_count_(node_count), edges_(std::move(edges))
{
    if (node_count_ < 2) throw std::invalid_argument("graph must have at least two nodes");
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        }
    }
}

std::vector<EdgeId> Multigraph::incident(NodeId v) const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (edges_[e].u == v || edges_[e].v == v) out.push_back(e);
    return out;
}

int Multigraph::degree(NodeId v) const
{
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

NodeSet Multigraph::neighbors(NodeId v) const
{
    NodeSet m = 0;
    for (const auto& e : edges_) {
        if (e.is_loop()) continue;
        if (e.u == v) m |= NodeSet{1} << e.v;
        if (e.v == v) m |= NodeSet{1} << e.u;
    }
    return m;
}

bool Multigraph::has_edge_between(NodeId a, NodeId b) const
{
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); });
}

bool Multigraph::is_simple() const
{
    std::vector<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.is_loop()) return false;
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

MinorResult contract(const Multigraph& g, EdgeId e)
{
    const Edge& ce = g.edge(e);
    if (ce.is_loop()) return delete_edge(g, e);
    if (g.node_count() <= 2) throw std::invalid_argument("contraction would leave fewer than two nodes");
    const NodeId keep = std::min(ce.u, ce.v);
    const NodeId gone = std::max(ce.u, ce.v);
    std::vector<NodeId> node_map(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == gone) node_map[v] = keep;
        else node_map[v] = v > gone ? v - 1 : v;
    }
    std::vector<Edge> edges;
    std::vector<std::optional<EdgeId>> edge_map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        edge_map[f] = static_cast<EdgeId>(edges.size());
        edges.push_back({node_map[g.edge(f).u], node_map[g.edge(f).v]});
    }
    return {Multigraph(g.node_count() - 1, std::move(edges)), std::move(edge_map), std::move(node_map)};
}

MinorResult delete_edge(const Multigraph& g, EdgeId e)
{
    (void)g.edge(e);
    std::vector<Edge> edges;
    std::vector<std::optional<EdgeId>> edge_map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        edge_map[f] = static_cast<EdgeId>(edges.size());
        edges.push_back(g.edge(f));
    }
    std::vector<NodeId> node_map(static_cast<std::size_t>(g.node_count()));
    std::iota(node_map.begin(), node_map.end(), 0);
    return {Multigraph(g.node_count(), std::move(edges)), std::move(edge_map), std::move(node_map)};
}

MinorResult delete_node(const Multigraph& g, NodeId v)
{
    if (v < 0 || v >= g.node_count()) throw std::invalid_argument("node id out of range");
    if (g.node_count() <= 2) throw std::invalid_argument("node deletion would leave fewer than two nodes");
    std::vector<NodeId> node_map(static_cast<std::size_t>(g.node_count()));
    for (NodeId w = 0; w < g.node_count(); ++w) node_map[w] = w == v ? -1 : (w > v ? w - 1 : w);
    std::vector<Edge> edges;
    std::vector<std::optional<EdgeId>> edge_map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const Edge& ed = g.edge(f);
        if (ed.u == v || ed.v == v) continue;
        edge_map[f] = static_cast<EdgeId>(edges.size());
        edges.push_back({node_map[ed.u], node_map[ed.v]});
    }
    return {Multigraph(g.node_count() - 1, std::move(edges)), std::move(edge_map), std::move(node_map)};
}

MinorResult apply_trace(const Multigraph& g, const MinorTrace& trace)
{
    std::vector<std::optional<EdgeId>> edge_map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) edge_map[e] = e;
    std::vector<NodeId> node_map(static_cast<std::size_t>(g.node_count()));
    std::iota(node_map.begin(), node_map.end(), 0);
    Multigraph cur = g;
    for (const auto& step : trace) {
        MinorResult r = [&] {
            switch (step.kind) {
            case MinorStep::Kind::contract: return contract(cur, step.id);
            case MinorStep::Kind::delete_edge: return delete_edge(cur, step.id);
            case MinorStep::Kind::delete_node: return delete_node(cur, step.id);
            }
            throw std::logic_error("unknown minor step");
        }();
        for (auto& m : edge_map)
            if (m) m = r.edge_map[*m];
        for (auto& m : node_map)
            if (m >= 0) m = r.node_map[m];
        cur = std::move(r.graph);
    }
    return {std::move(cur), std::move(edge_map), std::move(node_map)};
}

Simplification simplify(const Multigraph& g)
{
    std::map<std::pair<int, int>, EdgeId> classes;
    std::vector<Edge> edges;
    std::vector<EdgeId> representative;
    std::vector<int> multiplicity;
    std::vector<std::optional<EdgeId>> edge_map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        const auto key = std::make_pair(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
        auto [it, inserted] = classes.try_emplace(key, static_cast<EdgeId>(edges.size()));
        if (inserted) {
            edges.push_back(ed);
            representative.push_back(e);
            multiplicity.push_back(0);
        }
        ++multiplicity[it->second];
        edge_map[e] = it->second;
    }
    return {Multigraph(g.node_count(), std::move(edges)), std::move(representative), std::move(multiplicity),
            std::move(edge_map)};
}

int component_count(const Multigraph& g) { return count_components(g.node_count(), g.edges()); }

bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

bool induces_connected(const Multigraph& g, NodeSet nodes)
{
    if (nodes == 0) return true;
    NodeSet reached = nodes & (~nodes + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& e : g.edges()) {
            const NodeSet a = NodeSet{1} << e.u, b = NodeSet{1} << e.v;
            if (!(nodes & a) || !(nodes & b)) continue;
            if ((reached & a) && !(reached & b)) reached |= b, grew = true;
            else if ((reached & b) && !(reached & a)) reached |= a, grew = true;
        }
    }
    return reached == nodes;
}

bool spans_connected(const Multigraph& g, std::span<const EdgeId> edges)
{
    UnionFind uf(g.node_count());
    int comps = g.node_count();
    for (EdgeId e : edges)
        if (uf.unite(g.edge(e).u, g.edge(e).v)) --comps;
    return comps == 1;
}

bool is_two_connected(const Multigraph& g)
{
    if (g.node_count() < 3 || !is_connected(g)) return false;
    return blocks(g).cutnodes.empty();
}

BlockDecomposition blocks(const Multigraph& g)
{
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph is disconnected");
    const int n = g.node_count();
    std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        adj[ed.u].push_back({ed.v, e});
        adj[ed.v].push_back({ed.u, e});
    }

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> stack;
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    BlockDecomposition out;
    int timer = 0;

    std::function<void(NodeId, EdgeId)> dfs = [&](NodeId v, EdgeId parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (auto [w, e] : adj[v]) {
            if (e == parent_edge) continue;
            if (disc[w] == -1) {
                stack.push_back(e);
                ++children;
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent_edge != -1 || children > 1) is_cut[v] = true;
                    Block b;
                    EdgeId f;
                    do {
                        f = stack.back();
                        stack.pop_back();
                        b.edges.push_back(f);
                    } while (f != e);
                    out.blocks.push_back(std::move(b));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge == -1 && children > 1) is_cut[v] = true;
    };
    dfs(0, -1);

    for (auto& b : out.blocks) {
        std::sort(b.edges.begin(), b.edges.end());
        NodeSet ns = 0;
        for (EdgeId e : b.edges) ns |= (NodeSet{1} << g.edge(e).u) | (NodeSet{1} << g.edge(e).v);
        for (NodeId v = 0; v < n; ++v)
            if (ns >> v & 1u) b.nodes.push_back(v);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).is_loop()) out.blocks.push_back(Block{{g.edge(e).u}, {e}});
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.edges < b.edges; });
    for (NodeId v = 0; v < n; ++v)
        if (is_cut[v]) out.cutnodes.push_back(v);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> two_cutsets(const Multigraph& g)
{
    std::vector<std::pair<NodeId, NodeId>> out;
    const int n = g.node_count();
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            if (n - 2 < 2) continue;
            const NodeSet removed = (NodeSet{1} << u) | (NodeSet{1} << v);
            if (count_components(n, g.edges(), removed) > 1) out.emplace_back(u, v);
        }
    return out;
}

Multigraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges)
{
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (EdgeId e : edges) kept.push_back(g.edge(e));
    return Multigraph(g.node_count(), std::move(kept));
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const NodeId> nodes, std::vector<EdgeId>* edge_origin)
{
    std::vector<NodeId> index(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<NodeId>(i);
    std::vector<Edge> edges;
    if (edge_origin) edge_origin->clear();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (index[ed.u] < 0 || index[ed.v] < 0) continue;
        edges.push_back({index[ed.u], index[ed.v]});
        if (edge_origin) edge_origin->push_back(e);
    }
    return Multigraph(static_cast<int>(sorted.size()), std::move(edges));
}

Multigraph relabel(const Multigraph& g, std::span<const NodeId> perm, std::span<const EdgeId> edge_order)
{
    std::vector<Edge> edges;
    edges.reserve(edge_order.size());
    for (EdgeId old : edge_order) edges.push_back({perm[g.edge(old).u], perm[g.edge(old).v]});
    return Multigraph(g.node_count(), std::move(edges));
}

}  // namespace cutdom
