#include "cutdom/catalog.hpp"

#include "cutdom/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cutdom {

namespace {

int code_length(int n) { return n * (n - 1) / 2; }

// Branch and bound over degree-respecting labellings; the code is built one
// column at a time so a partial labelling fixes a prefix of the code.
class Canonizer {
public:
    explicit Canonizer(const Multigraph& g) : n_(g.node_count()), adj_(static_cast<std::size_t>(n_))
    {
        for (NodeId v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
        std::vector<int> deg(static_cast<std::size_t>(n_));
        for (NodeId v = 0; v < n_; ++v) deg[v] = std::popcount(adj_[v]);
        degree_ = deg;
        target_ = deg;
        std::sort(target_.begin(), target_.end());
        at_.assign(static_cast<std::size_t>(n_), -1);
        total_bits_ = code_length(n_);
    }

    CanonicalForm run(std::vector<NodeId>& perm)
    {
        best_ = std::numeric_limits<std::uint64_t>::max();
        recurse(0, 0, 0, 0);
        perm.assign(static_cast<std::size_t>(n_), -1);
        for (int pos = 0; pos < n_; ++pos) perm[best_at_[pos]] = pos;
        return {n_, best_};
    }

private:
    void recurse(int pos, NodeSet used, std::uint64_t prefix, int bits)
    {
        if (pos == n_) {
            if (prefix < best_) {
                best_ = prefix;
                best_at_ = at_;
            }
            return;
        }
        for (NodeId v = 0; v < n_; ++v) {
            if ((used >> v & 1u) || degree_[v] != target_[pos]) continue;
            std::uint64_t next = prefix;
            for (int i = 0; i < pos; ++i) next = (next << 1) | ((adj_[v] >> at_[i]) & 1u);
            const int next_bits = bits + pos;
            if (best_ != std::numeric_limits<std::uint64_t>::max()) {
                const std::uint64_t bound = best_ >> (total_bits_ - next_bits);
                if (next > bound) continue;
            }
            at_[pos] = v;
            recurse(pos + 1, used | (NodeSet{1} << v), next, next_bits);
        }
    }

    int n_;
    std::vector<NodeSet> adj_;
    std::vector<int> degree_;
    std::vector<int> target_;
    std::vector<NodeId> at_;
    std::vector<NodeId> best_at_;
    std::uint64_t best_ = 0;
    int total_bits_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g, std::vector<NodeId>& perm)
{
    if (g.node_count() > kMaxCanonicalNodes) throw SizeGuardError("canonical_form: too many nodes");
    if (!g.is_simple()) throw std::invalid_argument("canonical_form: graph must be simple");
    return Canonizer(g).run(perm);
}

CanonicalForm canonical_form(const Multigraph& g)
{
    std::vector<NodeId> perm;
    return canonical_form(g, perm);
}

Multigraph graph_from_canonical(const CanonicalForm& form)
{
    std::vector<Edge> edges;
    int bit = code_length(form.nodes) - 1;
    for (NodeId j = 1; j < form.nodes; ++j)
        for (NodeId i = 0; i < j; ++i, --bit)
            if (form.code >> bit & 1u) edges.push_back({i, j});
    return Multigraph(form.nodes, std::move(edges));
}

std::vector<Multigraph> generate_catalog(int n, int max_edges)
{
    if (n < 2) throw std::invalid_argument("generate_catalog: need at least two nodes");
    if (n > kMaxCatalogNodes) throw SizeGuardError("generate_catalog: at most 8 nodes supported");
    max_edges = std::min(max_edges, code_length(n));

    std::vector<CanonicalForm> connected;
    std::set<CanonicalForm> level{CanonicalForm{n, 0}};
    for (int m = 0; m <= max_edges; ++m) {
        std::set<CanonicalForm> next;
        for (const auto& form : level) {
            const Multigraph g = graph_from_canonical(form);
            if (m >= n - 1 && is_connected(g)) connected.push_back(form);
            if (m == max_edges) continue;
            for (NodeId j = 1; j < n; ++j)
                for (NodeId i = 0; i < j; ++i) {
                    if (g.has_edge_between(i, j)) continue;
                    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
                    edges.push_back({i, j});
                    next.insert(canonical_form(Multigraph(n, std::move(edges))));
                }
        }
        level = std::move(next);
    }

    std::vector<Multigraph> out;
    out.reserve(connected.size());
    for (const auto& form : connected) out.push_back(graph_from_canonical(form));
    return out;
}

std::vector<Multigraph> generate_catalogs(int max_nodes, int max_edges)
{
    std::vector<Multigraph> out;
    for (int n = 2; n <= max_nodes; ++n) {
        auto part = generate_catalog(n, max_edges);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::string to_graph6(const Multigraph& g)
{
    const int n = g.node_count();
    if (n > 62) throw SizeGuardError("graph6: at most 62 nodes supported");
    if (!g.is_simple()) throw std::invalid_argument("graph6: graph must be simple");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (NodeId j = 1; j < n; ++j)
        for (NodeId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge_between(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Multigraph from_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const int n = text[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: unsupported node count header");
    const int bits = code_length(n);
    if (static_cast<int>(text.size()) != 1 + (bits + 5) / 6) throw std::invalid_argument("graph6: wrong length");
    std::vector<Edge> edges;
    int k = 0;
    for (NodeId j = 1; j < n; ++j)
        for (NodeId i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: invalid character");
            if (byte >> (5 - k % 6) & 1) edges.push_back({i, j});
        }
    return Multigraph(n, std::move(edges));
}

namespace graphs {

Multigraph complete(int n)
{
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

Multigraph path(int n)
{
    std::vector<Edge> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph cycle(int n)
{
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

Multigraph star(int leaves)
{
    std::vector<Edge> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Multigraph(leaves + 1, std::move(edges));
}

Multigraph prism()
{
    return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Multigraph pyramid()
{
    return Multigraph(7, {{0, 1}, {1, 4}, {0, 2}, {2, 5}, {0, 3}, {3, 6}, {4, 5}, {5, 6}, {4, 6}});
}

Multigraph m1()
{
    return Multigraph(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
}

Multigraph two_triangles()
{
    return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace graphs

}  // namespace cutdom
