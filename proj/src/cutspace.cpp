#include "cutdom/cutspace.hpp"

#include "cutdom/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cutdom {

namespace {

bool by_size_then_mask(NodeSet a, NodeSet b)
{
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

bool crosses(NodeSet a, NodeSet b) { return (a & b) && (a & ~b) && (b & ~a); }

bool in_cut(const Edge& e, NodeSet side) { return ((side >> e.u) & 1u) != ((side >> e.v) & 1u); }

void check_weights(const Multigraph& g, const RatVector& c)
{
    if (static_cast<int>(c.size()) != g.edge_count()) {
        throw std::invalid_argument("weight vector has " + std::to_string(c.size()) + " entries, graph has " +
                                    std::to_string(g.edge_count()) + " edges");
    }
    for (const auto& x : c)
        if (x < 0) throw std::invalid_argument("weights must be nonnegative");
}

// c scaled by its common denominator; values of all cuts fit in long long
// whenever the total weight does.
struct ScaledWeights {
    IntVector big;
    std::vector<long long> small;
    Integer scale;
    bool fits = false;

    explicit ScaledWeights(const RatVector& c) : scale(common_denominator(c))
    {
        Integer total = 0;
        big.reserve(c.size());
        for (const auto& x : c) {
            Rational s = x * scale;
            big.push_back(s.get_num());
            total += big.back();
        }
        fits = total.fits_slong_p();
        if (fits) {
            small.reserve(big.size());
            for (const auto& x : big) small.push_back(x.get_si());
        }
    }

    Integer value(const Multigraph& g, NodeSet side) const
    {
        if (fits) {
            long long s = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (in_cut(g.edge(e), side)) s += small[e];
            return Integer(static_cast<long>(s));
        }
        Integer s = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in_cut(g.edge(e), side)) s += big[e];
        return s;
    }
};

std::vector<long long> restricted_row(const Multigraph& g, NodeSet side, std::span<const EdgeId> support)
{
    std::vector<long long> row;
    row.reserve(support.size());
    for (EdgeId e : support) row.push_back(in_cut(g.edge(e), side) ? 1 : 0);
    return row;
}

NodeSet canonical_side(const Multigraph& g, NodeSet side) { return (side & 1u) ? (g.all_nodes() & ~side) : side; }

std::vector<EdgeId> support_of(const RatVector& c)
{
    std::vector<EdgeId> s;
    for (std::size_t e = 0; e < c.size(); ++e)
        if (c[e] != 0) s.push_back(static_cast<EdgeId>(e));
    return s;
}

std::string describe(NodeSet s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if (s >> v & 1u) {
            os << (first ? "" : ",") << v;
            first = false;
        }
    os << '}';
    return os.str();
}

}  // namespace

RatVector Cut::char_vec(int edge_count) const
{
    RatVector v(static_cast<std::size_t>(edge_count), Rational(0));
    for (EdgeId e : edges) v[e] = 1;
    return v;
}

Cut make_cut(const Multigraph& g, NodeSet side)
{
    side &= g.all_nodes();
    if (side == 0 || side == g.all_nodes()) throw std::invalid_argument("cut shore must be proper and nonempty");
    Cut cut;
    cut.side = canonical_side(g, side);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in_cut(g.edge(e), cut.side)) cut.edges.push_back(e);
    return cut;
}

std::vector<Cut> enumerate_proper_cuts(const Multigraph& g)
{
    if (g.node_count() > kMaxCutNodes) throw SizeGuardError("cut enumeration limited to 24 nodes");
    const NodeSet rest = g.all_nodes() & ~NodeSet{1};
    std::vector<NodeSet> sides;
    sides.reserve((std::size_t{1} << (g.node_count() - 1)) - 1);
    for (NodeSet s = rest; s != 0; s = (s - 1) & rest) sides.push_back(s);
    std::sort(sides.begin(), sides.end(), by_size_then_mask);
    std::vector<Cut> cuts;
    cuts.reserve(sides.size());
    for (NodeSet s : sides) cuts.push_back(make_cut(g, s));
    return cuts;
}

std::vector<Cut> minimum_cuts(std::span<const Cut> cuts, const RatVector& c, Rational* lambda_out)
{
    const ScaledWeights w(c);
    std::vector<Integer> values;
    values.reserve(cuts.size());
    for (const auto& cut : cuts) {
        Integer v = 0;
        for (EdgeId e : cut.edges) v += w.big[e];
        values.push_back(std::move(v));
    }
    std::vector<Cut> out;
    if (cuts.empty()) return out;
    const Integer best = *std::min_element(values.begin(), values.end());
    for (std::size_t i = 0; i < cuts.size(); ++i)
        if (values[i] == best) out.push_back(cuts[i]);
    if (lambda_out) *lambda_out = Rational(best, w.scale), lambda_out->canonicalize();
    return out;
}

namespace {

// Minimum cuts without materializing every cut; same order as
// enumerate_proper_cuts.
std::vector<Cut> stream_minimum_cuts(const Multigraph& g, const RatVector& c, Rational& lambda_out)
{
    check_weights(g, c);
    if (g.node_count() > kMaxCutNodes) throw SizeGuardError("cut enumeration limited to 24 nodes");
    const ScaledWeights w(c);
    const NodeSet rest = g.all_nodes() & ~NodeSet{1};
    std::vector<NodeSet> best_sides;
    if (w.fits) {
        long long best = -1;
        for (NodeSet s = rest; s != 0; s = (s - 1) & rest) {
            long long v = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (in_cut(g.edge(e), s)) v += w.small[e];
            if (best < 0 || v < best) {
                best = v;
                best_sides.clear();
            }
            if (v == best) best_sides.push_back(s);
        }
        lambda_out = Rational(Integer(static_cast<long>(best)), w.scale);
    } else {
        Integer best = -1;
        for (NodeSet s = rest; s != 0; s = (s - 1) & rest) {
            const Integer v = w.value(g, s);
            if (best < 0 || v < best) {
                best = v;
                best_sides.clear();
            }
            if (v == best) best_sides.push_back(s);
        }
        lambda_out = Rational(best, w.scale);
    }
    lambda_out.canonicalize();
    std::sort(best_sides.begin(), best_sides.end(), by_size_then_mask);
    std::vector<Cut> out;
    out.reserve(best_sides.size());
    for (NodeSet s : best_sides) out.push_back(make_cut(g, s));
    return out;
}

}  // namespace

Rational lambda(const Multigraph& g, const RatVector& c)
{
    Rational l;
    stream_minimum_cuts(g, c, l);
    return l;
}

std::vector<Cut> minimum_cuts(const Multigraph& g, const RatVector& c)
{
    Rational l;
    return stream_minimum_cuts(g, c, l);
}

bool LaminarFamily::is_laminar() const
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (crosses(sets[i], sets[j])) return false;
    return true;
}

NodeSet small_shore(const Multigraph& g, NodeSet side)
{
    const NodeSet canon = canonical_side(g, side);
    const NodeSet other = g.all_nodes() & ~canon;
    return std::popcount(other) < std::popcount(canon) ? other : canon;
}

LaminarFamily laminar_basis(const Multigraph& g, const RatVector& c, std::span<const Cut> cuts)
{
    check_weights(g, c);
    LaminarFamily family;
    if (cuts.empty()) return family;
    const ScaledWeights w(c);
    const Integer target = w.value(g, cuts.front().side);
    const auto support = support_of(c);

    // Uncrossing closure over shores avoiding node 0: two such shores never
    // cover V, so crossing reduces to intersect-without-nesting.
    std::set<NodeSet, decltype(&by_size_then_mask)> closure(by_size_then_mask);
    for (const auto& cut : cuts) {
        if (w.value(g, cut.side) != target) throw std::invalid_argument("laminar_basis: cuts are not all minimum");
        closure.insert(cut.side);
    }
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<NodeSet> members(closure.begin(), closure.end());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const NodeSet s = members[i], t = members[j];
                if (!crosses(s, t)) continue;
                for (NodeSet u : {NodeSet(s & t), NodeSet(s | t)}) {
                    if (closure.count(u)) continue;
                    if (w.value(g, u) != target) {
                        throw InvariantViolation("uncrossing produced a non-minimum cut " + describe(u));
                    }
                    closure.insert(u);
                    grew = true;
                }
            }
    }

    std::vector<NodeSet> laminar;
    for (NodeSet s : closure) {
        if (std::none_of(laminar.begin(), laminar.end(), [&](NodeSet t) { return crosses(s, t); })) {
            laminar.push_back(s);
        }
    }

    std::vector<std::vector<long long>> rows;
    std::size_t r = 0;
    for (NodeSet s : laminar) {
        rows.push_back(restricted_row(g, s, support));
        const std::size_t nr = rank_small(rows, support.size());
        if (nr > r) {
            r = nr;
            family.sets.push_back(small_shore(g, s));
        } else {
            rows.pop_back();
        }
        if (r == support.size()) break;
    }
    return family;
}

namespace {

FacetCertificate certify_from_minimum(const Multigraph& g, const RatVector& c, const std::vector<Cut>& mins,
                                      const Rational& lam)
{
    FacetCertificate cert;
    cert.weight = c;
    cert.support = support_of(c);
    cert.lambda = lam;
    if (cert.lambda == 0) {
        cert.status = FacetStatus::zero_lambda;
        cert.min_int_form.coefficients.assign(c.size(), Integer(0));
        cert.min_int_form.rhs = 0;
        return cert;
    }
    cert.family = laminar_basis(g, c, mins);
    cert.rank = cert.family.size();

    std::vector<std::vector<long long>> all_rows;
    all_rows.reserve(mins.size());
    for (const auto& cut : mins) all_rows.push_back(restricted_row(g, cut.side, cert.support));
    const std::size_t full = rank_small(all_rows, cert.support.size());
    if (full != cert.rank) {
        throw InvariantViolation("laminar basis has rank " + std::to_string(cert.rank) + " but minimum cuts have rank " +
                                 std::to_string(full));
    }
    cert.status = cert.rank == cert.support.size() ? FacetStatus::facet : FacetStatus::not_facet;
    cert.min_int_form = minimum_integer_form(c, cert.lambda);
    return cert;
}

}  // namespace

FacetCertificate certify_facet(const Multigraph& g, std::span<const Cut> cuts, const RatVector& c)
{
    check_weights(g, c);
    Rational lam;
    const auto mins = minimum_cuts(cuts, c, &lam);
    return certify_from_minimum(g, c, mins, lam);
}

FacetCertificate certify_facet(const Multigraph& g, const RatVector& c)
{
    Rational lam;
    const auto mins = stream_minimum_cuts(g, c, lam);
    return certify_from_minimum(g, c, mins, lam);
}

bool is_witness(const Multigraph& g, const RatVector& c, int k)
{
    const auto cert = certify_facet(g, c);
    return cert.is_facet() && cert.min_int_rhs() > k;
}

bool odd_rhs_property_holds(const Multigraph& g, const FacetCertificate& cert)
{
    if (!cert.is_facet() || cert.min_int_rhs() % 2 == 0) return true;
    return cert.min_int_rhs() == 1 && static_cast<int>(cert.support.size()) == g.node_count() - 1 &&
           spans_connected(g, cert.support);
}

std::vector<int> levels(const LaminarFamily& family)
{
    const auto& sets = family.sets;
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return by_size_then_mask(sets[a], sets[b]); });
    std::vector<int> level(sets.size(), 0);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        int best = -1;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t j = order[oj];
            if (sets[j] != sets[i] && (sets[j] & ~sets[i]) == 0) best = std::max(best, level[j]);
        }
        level[i] = best + 1;
    }
    return level;
}

bool StructuralReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const StructuralCheck& c) { return !c.applicable || c.passed; });
}

const StructuralCheck* StructuralReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

StructuralReport structural_report(const Multigraph& g, const RatVector& c, int k, const LaminarFamily& family)
{
    check_weights(g, c);
    StructuralReport report;
    const Rational lam = lambda(g, c);
    if (lam == 0) {
        report.checks.push_back({"positive_lambda", true, false, "minimum cut has cost zero"});
        return report;
    }
    RatVector cn(c.size());
    for (std::size_t e = 0; e < c.size(); ++e) cn[e] = c[e] * k / lam;
    Rational half_k(k, 2);
    half_k.canonicalize();
    const auto support = support_of(c);
    auto add = [&](std::string name, bool applicable, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), applicable, applicable && passed, std::move(detail)});
    };
    auto cost_between = [&](NodeId a, NodeId b) {
        Rational s = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) s += cn[e];
        }
        return s;
    };
    auto star_cost = [&](NodeId v) {
        Rational s = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in_cut(g.edge(e), NodeSet{1} << v)) s += cn[e];
        return s;
    };
    auto contains = [&](NodeSet s) {
        return std::find(family.sets.begin(), family.sets.end(), s) != family.sets.end();
    };

    {
        std::string bad;
        for (EdgeId e : support) {
            int hits = 0;
            for (NodeSet s : family.sets) hits += in_cut(g.edge(e), s);
            if (hits < 2) bad += (bad.empty() ? "" : ",") + std::to_string(e);
        }
        add("every_edge_in_two_cuts", true, bad.empty(), bad.empty() ? "" : "edges in fewer than two cuts: " + bad);
    }
    {
        std::string bad;
        for (std::size_t e = 0; e < cn.size(); ++e)
            if (cn[e] > half_k) bad += (bad.empty() ? "" : ",") + std::to_string(e);
        add("cost_at_most_half_k", true, bad.empty(), bad.empty() ? "" : "edges above k/2: " + bad);
    }

    const auto lvl = levels(family);
    {
        std::string bad;
        for (std::size_t i = 0; i < lvl.size(); ++i)
            if (lvl[i] == 0 && std::popcount(family.sets[i]) != 1) bad += describe(family.sets[i]);
        add("level0_singletons", true, bad.empty(), bad.empty() ? "" : "non-singleton level-0 sets: " + bad);
    }
    {
        std::string bad;
        bool any = false;
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            if (lvl[i] != 1) continue;
            any = true;
            const NodeSet s = family.sets[i];
            bool ok = std::popcount(s) == 2;
            if (ok) {
                const NodeId u = std::countr_zero(s);
                const NodeId v = 31 - std::countl_zero(s);
                const Rational uv = cost_between(u, v);
                ok = contains(NodeSet{1} << u) && contains(NodeSet{1} << v) && g.has_edge_between(u, v) &&
                     uv == half_k && star_cost(u) - uv == half_k && star_cost(v) - uv == half_k;
            }
            if (!ok) bad += describe(s);
        }
        add("level1_adjacent_pairs", true, bad.empty(), bad.empty() ? "" : "bad level-1 sets: " + bad);
        add("has_level1_set", k >= 2, any, any ? "" : "no level-1 set");
    }
    {
        std::string bad;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (cn[e] != Rational(1, 2) && cn[e] != 1) bad += (bad.empty() ? "" : ",") + std::to_string(e);
        add("half_integral", k == 2, bad.empty(), bad.empty() ? "" : "edges outside {1/2,1}: " + bad);
    }
    add("two_connected", true, is_two_connected(g));
    {
        std::string bad;
        for (auto [u, v] : two_cutsets(g)) {
            const NodeSet removed = (NodeSet{1} << u) | (NodeSet{1} << v);
            const NodeSet rest = g.all_nodes() & ~removed;
            std::vector<NodeSet> comps;
            NodeSet seen = 0;
            for (NodeId s = 0; s < g.node_count(); ++s) {
                if (!(rest >> s & 1u) || (seen >> s & 1u)) continue;
                NodeSet comp = NodeSet{1} << s;
                for (bool grew = true; grew;) {
                    grew = false;
                    for (NodeId x = 0; x < g.node_count(); ++x)
                        if ((comp >> x & 1u)) {
                            const NodeSet nb = g.neighbors(x) & rest & ~comp;
                            if (nb) comp |= nb, grew = true;
                        }
                }
                seen |= comp;
                comps.push_back(comp);
            }
            bool ok = comps.size() == 2 && !g.has_edge_between(u, v);
            if (ok) {
                const auto single = std::find_if(comps.begin(), comps.end(), [](NodeSet s) { return std::popcount(s) == 1; });
                ok = single != comps.end();
                if (ok) {
                    const NodeId w = std::countr_zero(*single);
                    ok = g.has_edge_between(u, w) && g.has_edge_between(v, w) && cost_between(u, w) == half_k &&
                         cost_between(v, w) == half_k;
                }
            }
            ok = ok && !(star_cost(u) == k && star_cost(v) == k);
            if (!ok) bad += describe(removed);
        }
        add("two_cutset_shape", k == 2, bad.empty(), bad.empty() ? "" : "bad 2-cutsets: " + bad);
    }
    return report;
}

}  // namespace cutdom
