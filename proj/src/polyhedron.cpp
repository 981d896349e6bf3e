#include "cutdom/polyhedron.hpp"

#include "cutdom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cutdom {

namespace {

void require_connected(const Multigraph& g, const char* what)
{
    if (!is_connected(g)) throw std::invalid_argument(std::string(what) + ": graph must be connected");
}

RatVector unit(std::size_t n, std::size_t i)
{
    RatVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

HRep build_subtour_hrep(const Multigraph& g)
{
    if (g.node_count() > kMaxSubtourNodes) throw SizeGuardError("SUBTOUR is limited to 16 nodes");
    require_connected(g, "build_subtour_hrep");
    const auto m = static_cast<std::size_t>(g.edge_count());
    HRep h;
    h.dimension = m;
    for (const auto& cut : enumerate_proper_cuts(g)) h.rows.push_back({cut.char_vec(g.edge_count()), Rational(2)});
    for (std::size_t e = 0; e < m; ++e) h.rows.push_back({unit(m, e), Rational(0)});
    return h;
}

VRep subtour_vertices(const Multigraph& g, const DdOptions& opts) { return enumerate_vertices(build_subtour_hrep(g), opts); }

std::vector<FacetCertificate> facet_list(const Multigraph& g, const DdOptions& opts)
{
    const auto vrep = subtour_vertices(g, opts);
    const auto cuts = enumerate_proper_cuts(g);
    std::vector<FacetCertificate> out;
    out.reserve(vrep.vertices.size());
    for (const auto& c : vrep.vertices) {
        auto cert = certify_facet(g, cuts, c);
        if (!cert.is_facet() || cert.lambda != 2) {
            throw InvariantViolation("a vertex of SUBTOUR does not define a facet of CUT with lambda 2");
        }
        out.push_back(std::move(cert));
    }
    return out;
}

std::optional<RatVector> vertex_from_certificate(const Multigraph& g, const FacetCertificate& cert)
{
    const std::size_t k = cert.support.size();
    if (cert.family.size() != k || k == 0) return std::nullopt;
    std::vector<RatVector> rows;
    for (NodeSet s : cert.family.sets) {
        RatVector row;
        for (EdgeId e : cert.support) {
            const auto& ed = g.edge(e);
            row.emplace_back(((s >> ed.u & 1u) != (s >> ed.v & 1u)) ? 1 : 0);
        }
        rows.push_back(std::move(row));
    }
    RatVector y;
    if (!solve_square(RatMatrix(std::move(rows), k), RatVector(k, Rational(2)), y)) return std::nullopt;
    RatVector x(static_cast<std::size_t>(g.edge_count()), Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (y[i] < 0) return std::nullopt;
        x[cert.support[i]] = y[i];
    }
    if (lambda(g, x) != 2) return std::nullopt;
    return x;
}

Integer kstar(const Multigraph& g, const DdOptions& opts)
{
    if (!is_connected(g)) return 0;
    const auto simple = simplify(g).graph;
    Integer best = 0;
    for (const auto& cert : facet_list(simple, opts)) best = std::max(best, cert.min_int_rhs());
    return best;
}

bool is_tour_vector(const Multigraph& g, const RatVector& x)
{
    if (static_cast<int>(x.size()) != g.edge_count()) throw std::invalid_argument("vector length differs from edge count");
    std::vector<Integer> degree(static_cast<std::size_t>(g.node_count()), Integer(0));
    std::vector<EdgeId> support;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (x[e] < 0 || x[e].get_den() != 1) return false;
        if (x[e] == 0) continue;
        support.push_back(e);
        const auto& ed = g.edge(e);
        degree[ed.u] += x[e].get_num();
        degree[ed.v] += x[e].get_num();
    }
    for (const auto& d : degree)
        if (mpz_odd_p(d.get_mpz_t())) return false;
    return spans_connected(g, support);
}

GtspComparison gtsp_equals_subtour(const Multigraph& g, const DdOptions& opts)
{
    GtspComparison out;
    for (auto& v : subtour_vertices(g, opts).vertices)
        if (!is_tour_vector(g, v)) out.non_tour_vertices.push_back(std::move(v));
    out.equal = out.non_tour_vertices.empty();
    for (const auto& v : out.non_tour_vertices) {
        if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; })) {
            out.counterexample = v;
            break;
        }
    }
    if (!out.counterexample && !out.equal) out.counterexample = out.non_tour_vertices.front();
    return out;
}

BlockComposition check_block_composition(const Multigraph& g, const DdOptions& opts,
                                         const std::vector<FacetCertificate>* known_facets)
{
    BlockComposition out;
    if (!g.is_simple()) throw std::invalid_argument("check_block_composition: graph must be simple");
    if (!is_connected(g)) return out;
    const auto decomposition = blocks(g);
    if (decomposition.cutnodes.empty()) return out;
    out.applicable = true;
    out.block_count = decomposition.blocks.size();

    const auto m = static_cast<std::size_t>(g.edge_count());
    // Partial sums over the blocks processed so far, each normalized to RHS 2.
    std::vector<RatVector> partial{RatVector(m, Rational(0))};
    for (const auto& block : decomposition.blocks) {
        std::vector<EdgeId> origin;
        const auto sub = induced_subgraph(g, block.nodes, &origin);
        // Blocks share at most one node, so in a simple graph the induced
        // subgraph on a block's nodes is the block itself.
        std::vector<RatVector> next;
        for (const auto& v : subtour_vertices(sub, opts).vertices)
            for (const auto& base : partial) {
                RatVector c = base;
                for (std::size_t i = 0; i < origin.size(); ++i) c[origin[i]] += v[i];
                next.push_back(std::move(c));
            }
        partial = std::move(next);
    }

    std::set<IntegerForm> composed, direct;
    for (const auto& c : partial) composed.insert(minimum_integer_form(c, Rational(2)));
    if (known_facets) {
        for (const auto& cert : *known_facets) direct.insert(cert.min_int_form);
    } else {
        for (const auto& cert : facet_list(g, opts)) direct.insert(cert.min_int_form);
    }
    out.composed = composed.size();
    out.direct = direct.size();
    out.holds = composed == direct;
    return out;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

EfSystem build_ef_system(const Multigraph& g, NodeId root)
{
    if (g.node_count() > kMaxEfNodes || g.edge_count() > kMaxEfEdges) {
        throw SizeGuardError("extended formulation check is limited to 5 nodes and 8 edges");
    }
    if (root < 0 || root >= g.node_count()) throw std::invalid_argument("root is not a node of the graph");
    require_connected(g, "build_ef_system");

    EfSystem ef;
    ef.root = root;
    for (const auto& e : g.edges()) {
        ef.arcs.push_back({e.u, e.v});
        ef.arcs.push_back({e.v, e.u});
    }

    const int n = g.node_count(), m = g.edge_count();
    std::vector<EdgeId> chosen;
    auto orient = [&] {
        std::vector<int> arcs;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<NodeId> frontier{root};
        seen[root] = true;
        while (!frontier.empty()) {
            const NodeId v = frontier.back();
            frontier.pop_back();
            for (EdgeId e : chosen) {
                const auto& ed = g.edge(e);
                if (ed.u != v && ed.v != v) continue;
                const NodeId w = ed.other(v);
                if (seen[w]) continue;
                seen[w] = true;
                arcs.push_back(ed.u == v ? 2 * e : 2 * e + 1);
                frontier.push_back(w);
            }
        }
        std::sort(arcs.begin(), arcs.end());
        ef.arborescences.push_back(std::move(arcs));
    };
    auto search = [&](auto& self, EdgeId from) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            DisjointSets ds(n);
            for (EdgeId e : chosen)
                if (!ds.unite(g.edge(e).u, g.edge(e).v)) return;
            orient();
            return;
        }
        for (EdgeId e = from; e < m; ++e) {
            if (g.edge(e).is_loop()) continue;
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
        }
    };
    search(search, 0);
    return ef;
}

Integer spanning_tree_count(const Multigraph& g)
{
    const int n = g.node_count();
    std::vector<RatVector> lap(static_cast<std::size_t>(n - 1), RatVector(static_cast<std::size_t>(n - 1), Rational(0)));
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        if (e.u > 0) lap[e.u - 1][e.u - 1] += 1;
        if (e.v > 0) lap[e.v - 1][e.v - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            lap[e.u - 1][e.v - 1] -= 1;
            lap[e.v - 1][e.u - 1] -= 1;
        }
    }
    // Determinant by Gaussian elimination; the Laplacian minor is symmetric
    // positive semidefinite, so a missing pivot means determinant zero.
    Rational det = 1;
    for (std::size_t c = 0; c < lap.size(); ++c) {
        if (lap[c][c] == 0) return 0;
        det *= lap[c][c];
        for (std::size_t r = c + 1; r < lap.size(); ++r) {
            if (lap[r][c] == 0) continue;
            const Rational f = lap[r][c] / lap[c][c];
            for (std::size_t j = c; j < lap.size(); ++j) lap[r][j] -= f * lap[c][j];
        }
    }
    return det.get_num();
}

EfReport ef_projection_check(const Multigraph& g, NodeId root, const DdOptions& opts)
{
    const EfSystem ef = build_ef_system(g, root);
    EfReport report;
    report.root = root;
    report.arborescences = ef.arborescences.size();
    const Integer trees = spanning_tree_count(g);
    if (trees != static_cast<unsigned long>(ef.arborescences.size())) {
        report.problems.push_back("arborescence count " + std::to_string(ef.arborescences.size()) +
                                  " differs from the matrix-tree count " + trees.get_str());
    }

    const std::size_t arcs = ef.arcs.size();
    HRep lifted;
    lifted.dimension = arcs;
    for (const auto& b : ef.arborescences) {
        RatVector row(arcs, Rational(0));
        for (int a : b) row[a] = 1;
        lifted.rows.push_back({std::move(row), Rational(1)});
    }
    for (std::size_t a = 0; a < arcs; ++a) lifted.rows.push_back({unit(arcs, a), Rational(0)});
    const auto vrep = enumerate_vertices(lifted, opts);
    report.lifted_vertices = vrep.vertices.size();

    const auto m = static_cast<std::size_t>(g.edge_count());
    std::set<RatVector> projected;
    for (const auto& y : vrep.vertices) {
        RatVector x(m);
        for (std::size_t e = 0; e < m; ++e) x[e] = y[2 * e] + y[2 * e + 1];
        projected.insert(std::move(x));
    }
    // Only the minimal points of the projection can be its vertices.
    std::vector<RatVector> minimal;
    for (const auto& x : projected) {
        const bool dominated = std::any_of(projected.begin(), projected.end(), [&](const RatVector& z) {
            if (z == x) return false;
            for (std::size_t e = 0; e < m; ++e)
                if (z[e] > x[e]) return false;
            return true;
        });
        if (!dominated) minimal.push_back(x);
    }
    report.projected_vertices = minimal.size();

    for (const auto& r : vrep.rays) {
        if (std::count_if(r.begin(), r.end(), [](const Rational& v) { return v != 0; }) != 1) {
            report.problems.push_back("lifted polyhedron has a ray that is not a unit vector");
        }
    }

    const auto facets = facet_list(g, opts);
    for (const auto& x : projected) {
        for (const auto& f : facets) {
            Rational lhs = 0;
            for (std::size_t e = 0; e < m; ++e) lhs += x[e] * f.min_int_form.coefficients[e];
            if (lhs < f.min_int_rhs()) {
                report.problems.push_back("projected point violates a facet of CUT");
                break;
            }
        }
    }

    for (const auto& cut : enumerate_proper_cuts(g)) {
        const NodeSet other = g.all_nodes() & ~cut.side;
        if (!induces_connected(g, cut.side) || !induces_connected(g, other)) continue;
        if (!projected.count(cut.char_vec(g.edge_count()))) {
            report.problems.push_back("bond is not a projected vertex");
        }
    }

    report.holds = report.problems.empty();
    return report;
}

}  // namespace cutdom
