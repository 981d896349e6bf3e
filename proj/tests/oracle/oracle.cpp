#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

bool crosses(std::uint32_t a, std::uint32_t b) { return (a & b) && (a & ~b) && (b & ~a); }

bool connected_on(int n, const std::vector<cutdom::Edge>& edges, std::uint32_t nodes)
{
    if (nodes == 0) return true;
    std::uint32_t seen = nodes & (~nodes + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& e : edges) {
            if (!(nodes >> e.u & 1u) || !(nodes >> e.v & 1u)) continue;
            const bool iu = seen >> e.u & 1u, iv = seen >> e.v & 1u;
            if (iu != iv) {
                seen |= (1u << e.u) | (1u << e.v);
                grew = true;
            }
        }
    }
    (void)n;
    return seen == nodes;
}

// Reduced row echelon with incremental insertion; returns false if `row`
// is dependent on what is already stored.
struct Echelon {
    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;

    bool insert(RatVector row)
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (row[pivots[i]] == 0) continue;
            const Rational f = row[pivots[i]];
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * rows[i][j];
        }
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) return false;
        const Rational inv = 1 / row[p];
        for (auto& x : row) x *= inv;
        for (auto& r : rows) {
            if (r[p] == 0) continue;
            const Rational f = r[p];
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * row[j];
        }
        rows.push_back(std::move(row));
        pivots.push_back(p);
        return true;
    }
};

bool solve(std::vector<RatVector> a, RatVector b, RatVector& x)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

}  // namespace

std::size_t naive_rank(std::vector<RatVector> rows)
{
    Echelon ech;
    std::size_t r = 0;
    for (auto& row : rows) r += ech.insert(std::move(row));
    return r;
}

std::uint64_t isomorphism_key(const Multigraph& g)
{
    const int n = g.node_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge_between(perm[i], perm[j]) ? 1u : 0u);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

cutdom::Integer spanning_tree_count(const Multigraph& g)
{
    const int n = g.node_count();
    std::vector<RatVector> lap(static_cast<std::size_t>(n - 1), RatVector(static_cast<std::size_t>(n - 1), Rational(0)));
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        for (int a : {e.u, e.v})
            if (a > 0) lap[a - 1][a - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            lap[e.u - 1][e.v - 1] -= 1;
            lap[e.v - 1][e.u - 1] -= 1;
        }
    }
    Rational det = 1;
    const std::size_t m = lap.size();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (p < m && lap[p][c] == 0) ++p;
        if (p == m) return 0;
        if (p != c) {
            std::swap(lap[p], lap[c]);
            det = -det;
        }
        det *= lap[c][c];
        for (std::size_t r = c + 1; r < m; ++r) {
            const Rational f = lap[r][c] / lap[c][c];
            for (std::size_t j = c; j < m; ++j) lap[r][j] -= f * lap[c][j];
        }
    }
    return det.get_num();
}

Rational cut_value(const Multigraph& g, const RatVector& x, std::uint32_t side)
{
    Rational s = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if ((side >> ed.u & 1u) != (side >> ed.v & 1u)) s += x[e];
    }
    return s;
}

Rational min_cut_value(const Multigraph& g, const RatVector& x)
{
    const std::uint32_t all = (1u << g.node_count()) - 1;
    Rational best = -1;
    for (std::uint32_t s = 2; s < all; s += 2) {
        const Rational v = cut_value(g, x, s);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

std::vector<RatVector> subtour_vertices(const Multigraph& g)
{
    const int n = g.node_count();
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("oracle limited to 20 edges");
    const std::uint32_t all = (1u << n) - 1;
    const std::vector<cutdom::Edge> all_edges(g.edges().begin(), g.edges().end());
    std::vector<RatVector> found;

    for (std::uint32_t fmask = 1; fmask < (1u << m); ++fmask) {
        std::vector<int> f;
        std::vector<cutdom::Edge> fedges;
        for (int e = 0; e < m; ++e)
            if (fmask >> e & 1u) {
                f.push_back(e);
                fedges.push_back(g.edge(e));
            }
        if (!connected_on(n, fedges, all)) continue;

        std::vector<std::uint32_t> bonds;
        for (std::uint32_t s = 2; s < all; s += 2)
            if (connected_on(n, fedges, s) && connected_on(n, fedges, all & ~s)) bonds.push_back(s);

        auto row_of = [&](std::uint32_t s) {
            RatVector r;
            for (const auto& e : fedges) r.push_back(((s >> e.u & 1u) != (s >> e.v & 1u)) ? 1 : 0);
            return r;
        };

        std::vector<std::uint32_t> chosen;
        std::function<void(std::size_t, const Echelon&)> dfs = [&](std::size_t from, const Echelon& ech) {
            if (chosen.size() == f.size()) {
                std::vector<RatVector> a;
                for (auto s : chosen) a.push_back(row_of(s));
                RatVector y;
                if (!solve(a, RatVector(f.size(), Rational(2)), y)) return;
                if (std::any_of(y.begin(), y.end(), [](const Rational& v) { return v <= 0; })) return;
                RatVector x(static_cast<std::size_t>(m), Rational(0));
                for (std::size_t i = 0; i < f.size(); ++i) x[f[i]] = y[i];
                if (min_cut_value(g, x) < 2) return;
                found.push_back(std::move(x));
                return;
            }
            for (std::size_t i = from; i < bonds.size(); ++i) {
                const auto s = bonds[i];
                if (std::any_of(chosen.begin(), chosen.end(), [&](std::uint32_t t) { return crosses(s, t); })) continue;
                Echelon next = ech;
                if (!next.insert(row_of(s))) continue;
                chosen.push_back(s);
                dfs(i + 1, next);
                chosen.pop_back();
            }
        };
        dfs(0, Echelon{});
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace oracle
