#include "cutdom/minors.hpp"

#include "cutdom/catalog.hpp"
#include "cutdom/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cutdom {

namespace {

std::vector<NodeId> members(NodeSet s)
{
    std::vector<NodeId> out;
    for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
}

// Pattern nodes in an order where each node after the first has a placed
// neighbor whenever possible: start at the largest degree, then take the
// node with most placed neighbors (ties: larger degree, smaller id).
std::vector<NodeId> placement_order(const Multigraph& p)
{
    const int n = p.node_count();
    std::vector<NodeId> order;
    NodeSet placed = 0;
    while (static_cast<int>(order.size()) < n) {
        NodeId best = -1;
        int best_links = -1, best_deg = -1;
        for (NodeId v = 0; v < n; ++v) {
            if (placed >> v & 1u) continue;
            const int links = std::popcount(p.neighbors(v) & placed);
            const int deg = std::popcount(p.neighbors(v));
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed |= NodeSet{1} << best;
    }
    return order;
}

class MinorSearch {
public:
    MinorSearch(const Multigraph& host, const Multigraph& pattern) : host_(host), pattern_(pattern)
    {
        const int n = host.node_count();
        by_low_.resize(static_cast<std::size_t>(n));
        for (NodeSet s = 1; s <= host.all_nodes() && s != 0; ++s) {
            if (induces_connected(host, s)) by_low_[std::countr_zero(s)].push_back(s);
        }
        order_ = placement_order(pattern);
        for (NodeId v = 0; v < pattern.node_count(); ++v) pattern_degree_.push_back(std::popcount(pattern.neighbors(v)));
    }

    std::optional<MinorModel> run()
    {
        parts_.clear();
        if (partition(host_.all_nodes())) return model_;
        return std::nullopt;
    }

private:
    bool partition(NodeSet free)
    {
        const int need = pattern_.node_count() - static_cast<int>(parts_.size());
        if (free == 0) return need == 0 && embed();
        if (need <= 0 || std::popcount(free) < need) return false;
        const NodeId low = std::countr_zero(free);
        for (NodeSet s : by_low_[low]) {
            if ((s & ~free) != 0) continue;
            // Leave at least one node for each part still to be formed.
            if (std::popcount(free & ~s) < need - 1) continue;
            parts_.push_back(s);
            if (partition(free & ~s)) return true;
            parts_.pop_back();
        }
        return false;
    }

    NodeSet closed_neighborhood(NodeSet s) const
    {
        NodeSet out = s;
        for (NodeId v : members(s)) out |= host_.neighbors(v);
        return out;
    }

    bool embed()
    {
        const int k = static_cast<int>(parts_.size());
        quotient_.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            const NodeSet reach = closed_neighborhood(parts_[i]);
            for (int j = 0; j < k; ++j)
                if (i != j && (reach & parts_[j])) quotient_[i] |= NodeSet{1} << j;
        }
        int edges = 0;
        for (auto q : quotient_) edges += std::popcount(q);
        if (edges / 2 < pattern_.edge_count()) return false;
        image_.assign(static_cast<std::size_t>(pattern_.node_count()), -1);
        return assign(0, 0);
    }

    bool assign(std::size_t depth, NodeSet used)
    {
        if (depth == order_.size()) {
            build_model();
            return true;
        }
        const NodeId p = order_[depth];
        for (int q = 0; q < static_cast<int>(quotient_.size()); ++q) {
            if (used >> q & 1u) continue;
            if (std::popcount(quotient_[q]) < pattern_degree_[p]) continue;
            bool ok = true;
            for (NodeId w : members(pattern_.neighbors(p))) {
                if (image_[w] >= 0 && !(quotient_[q] >> image_[w] & 1u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[p] = q;
            if (assign(depth + 1, used | (NodeSet{1} << q))) return true;
            image_[p] = -1;
        }
        return false;
    }

    void build_model()
    {
        model_.branch_sets.clear();
        model_.edge_witness.clear();
        for (NodeId p = 0; p < pattern_.node_count(); ++p) model_.branch_sets.push_back(members(parts_[image_[p]]));
        for (const auto& f : pattern_.edges()) {
            const NodeSet a = parts_[image_[f.u]], b = parts_[image_[f.v]];
            for (EdgeId e = 0; e < host_.edge_count(); ++e) {
                const auto& he = host_.edge(e);
                if (((a >> he.u & 1u) && (b >> he.v & 1u)) || ((a >> he.v & 1u) && (b >> he.u & 1u))) {
                    model_.edge_witness.push_back(e);
                    break;
                }
            }
        }
    }

    const Multigraph& host_;
    const Multigraph& pattern_;
    std::vector<std::vector<NodeSet>> by_low_;
    std::vector<NodeId> order_;
    std::vector<int> pattern_degree_;
    std::vector<NodeSet> parts_;
    std::vector<NodeSet> quotient_;
    std::vector<int> image_;
    MinorModel model_;
};

}  // namespace

std::span<const Pattern> standard_patterns()
{
    static const std::vector<Pattern> patterns{
        {"prism", graphs::prism()},
        {"pyramid", graphs::pyramid()},
        {"m1", graphs::m1()},
    };
    return patterns;
}

const Pattern& pattern_by_name(std::string_view name)
{
    for (const auto& p : standard_patterns())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown pattern '" + std::string(name) + "' (expected prism, pyramid or m1)");
}

bool verify_minor_model(const Multigraph& host, const Multigraph& pattern, const MinorModel& model, std::string* why)
{
    auto fail = [&](std::string reason) {
        if (why) *why = std::move(reason);
        return false;
    };
    if (static_cast<int>(model.branch_sets.size()) != pattern.node_count()) return fail("wrong number of branch sets");
    if (static_cast<int>(model.edge_witness.size()) != pattern.edge_count()) return fail("wrong number of edge witnesses");
    std::vector<int> owner(static_cast<std::size_t>(host.node_count()), -1);
    for (int p = 0; p < pattern.node_count(); ++p) {
        const auto& set = model.branch_sets[p];
        if (set.empty()) return fail("empty branch set for pattern node " + std::to_string(p));
        NodeSet mask = 0;
        for (NodeId v : set) {
            if (v < 0 || v >= host.node_count()) return fail("branch set names a missing host node");
            if (owner[v] != -1) return fail("host node " + std::to_string(v) + " used twice");
            owner[v] = p;
            mask |= NodeSet{1} << v;
        }
        if (!induces_connected(host, mask)) return fail("branch set of pattern node " + std::to_string(p) + " is disconnected");
    }
    std::vector<EdgeId> seen;
    for (int f = 0; f < pattern.edge_count(); ++f) {
        const EdgeId e = model.edge_witness[f];
        if (e < 0 || e >= host.edge_count()) return fail("witness names a missing host edge");
        if (std::find(seen.begin(), seen.end(), e) != seen.end()) return fail("host edge witnesses two pattern edges");
        seen.push_back(e);
        const auto& he = host.edge(e);
        const auto& pe = pattern.edge(f);
        const bool forward = owner[he.u] == pe.u && owner[he.v] == pe.v;
        const bool backward = owner[he.u] == pe.v && owner[he.v] == pe.u;
        if (!forward && !backward) return fail("witness for pattern edge " + std::to_string(f) + " joins the wrong sets");
    }
    return true;
}

std::optional<MinorModel> has_minor(const Multigraph& host, const Pattern& pattern)
{
    if (host.node_count() > kMaxMinorHostNodes) throw SizeGuardError("minor search is limited to 12 host nodes");
    if (!host.is_simple()) throw std::invalid_argument("has_minor: host must be simple");
    if (host.node_count() < pattern.graph.node_count() || host.edge_count() < pattern.graph.edge_count()) {
        return std::nullopt;
    }

    std::vector<NodeSet> components;
    NodeSet seen = 0;
    for (NodeId v = 0; v < host.node_count(); ++v) {
        if (seen >> v & 1u) continue;
        NodeSet comp = NodeSet{1} << v;
        for (NodeSet grown = comp;; comp = grown) {
            for (NodeId w : members(comp)) grown |= host.neighbors(w);
            if (grown == comp) break;
        }
        seen |= comp;
        components.push_back(comp);
    }

    for (NodeSet comp : components) {
        if (std::popcount(comp) < pattern.graph.node_count()) continue;
        std::optional<MinorModel> found;
        if (components.size() == 1) {
            found = MinorSearch(host, pattern.graph).run();
        } else {
            const auto nodes = members(comp);
            std::vector<EdgeId> origin;
            const auto sub = induced_subgraph(host, nodes, &origin);
            if (sub.edge_count() < pattern.graph.edge_count()) continue;
            found = MinorSearch(sub, pattern.graph).run();
            if (found) {
                for (auto& set : found->branch_sets)
                    for (auto& v : set) v = nodes[v];
                for (auto& e : found->edge_witness) e = origin[e];
            }
        }
        if (found) {
            std::string why;
            if (!verify_minor_model(host, pattern.graph, *found, &why)) {
                throw InvariantViolation("minor search produced an invalid model: " + why);
            }
            return found;
        }
    }
    return std::nullopt;
}

MinimalityReport is_minor_minimal_non_k(const Multigraph& g, int k, const KstarFunction& kstar_fn)
{
    const KstarFunction ks = kstar_fn ? kstar_fn : [](const Multigraph& h) { return kstar(h); };
    MinimalityReport report;
    report.kstar = ks(g);
    if (report.kstar <= k) return report;
    report.minimal = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (auto kind : {MinorStep::Kind::delete_edge, MinorStep::Kind::contract}) {
            if (kind == MinorStep::Kind::contract && g.node_count() <= 2) {
                // The only contraction left would produce a single node,
                // whose cut dominant is not defined; it is a 0-graph.
                report.steps.push_back({kind, e, Integer(0)});
                continue;
            }
            const auto minor = kind == MinorStep::Kind::contract ? contract(g, e) : delete_edge(g, e);
            const Integer value = ks(simplify(minor.graph).graph);
            report.steps.push_back({kind, e, value});
            if (value > k) report.minimal = false;
        }
    }
    return report;
}

}  // namespace cutdom
