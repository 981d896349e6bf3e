#include "cutdom/errors.hpp"
#include "cutdom/polyhedron.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cutdom {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
    IntVector z;
    Bits zero;
};

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool contains_all(const Bits& outer, const Bits& inner)
{
    for (std::size_t i = 0; i < inner.size(); ++i)
        if ((outer[i] & inner[i]) != inner[i]) return false;
    return true;
}

Integer dot(const IntVector& a, const IntVector& z)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(z[i]) != 0) s += a[i] * z[i];
    return s;
}

std::size_t nonzeros(const IntVector& v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; }));
}

// Rows of the homogenized cone {(x, t) : <a,x> - b t >= 0, t >= 0}, cleared
// of denominators.
std::vector<IntVector> homogenize(const HRep& h)
{
    std::vector<IntVector> rows;
    rows.reserve(h.rows.size() + 1);
    for (const auto& hs : h.rows) {
        if (hs.a.size() != h.dimension) throw std::invalid_argument("half-space has wrong dimension");
        RatVector full = hs.a;
        full.push_back(-hs.b);
        const Integer l = common_denominator(full);
        IntVector row;
        row.reserve(full.size());
        for (const auto& x : full) {
            const Rational s = x * l;
            row.push_back(s.get_num());
        }
        rows.push_back(std::move(row));
    }
    IntVector t(h.dimension + 1, Integer(0));
    t.back() = 1;
    rows.push_back(std::move(t));
    return rows;
}

std::size_t tight_rank(const HRep& h, const RatVector& x)
{
    std::vector<RatVector> tight;
    for (const auto& hs : h.rows) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += hs.a[i] * x[i];
        if (s == hs.b) tight.push_back(hs.a);
    }
    if (tight.empty()) return 0;
    return rank(RatMatrix(std::move(tight), h.dimension));
}

bool feasible(const HRep& h, const RatVector& x)
{
    for (const auto& hs : h.rows) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += hs.a[i] * x[i];
        if (s < hs.b) return false;
    }
    return true;
}

}  // namespace

VRep enumerate_vertices(const HRep& h, const DdOptions& opts)
{
    const std::size_t d = h.dimension + 1;
    const auto rows = homogenize(h);
    const std::size_t words = words_for(rows.size());

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return nonzeros(rows[a]) < nonzeros(rows[b]); });

    // Initial simplicial cone from the sparsest independent rows.
    std::vector<std::size_t> basis;
    std::vector<IntVector> basis_rows;
    for (std::size_t idx : order) {
        basis_rows.push_back(rows[idx]);
        if (rank(basis_rows, d) == basis_rows.size()) {
            basis.push_back(idx);
            if (basis.size() == d) break;
        } else {
            basis_rows.pop_back();
        }
    }
    if (basis.size() < d) throw std::invalid_argument("polyhedron is not pointed");

    std::vector<RatVector> basis_q;
    for (const auto& r : basis_rows) basis_q.push_back(to_rational(r));
    const RatMatrix ab(basis_q, d);
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < d; ++i) {
        RatVector e(d, Rational(0)), col;
        e[i] = 1;
        if (!solve_square(ab, e, col)) throw InvariantViolation("initial basis became singular");
        const Integer l = common_denominator(col);
        Ray ray;
        for (const auto& x : col) {
            const Rational s = x * l;
            ray.z.push_back(s.get_num());
        }
        make_primitive(ray.z);
        ray.zero.assign(words, 0);
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) set_bit(ray.zero, basis[j]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(rows.size(), false);
    for (std::size_t idx : basis) in_basis[idx] = true;

    VRep out;
    out.peak_rays = rays.size();
    std::vector<Integer> value;
    for (std::size_t idx : order) {
        if (in_basis[idx]) continue;
        const IntVector& a = rows[idx];
        value.clear();
        value.reserve(rays.size());
        for (const auto& r : rays) value.push_back(dot(a, r.z));

        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = sgn(value[i]);
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (sgn(value[i]) == 0) set_bit(rays[i].zero, idx);
            continue;
        }

        std::vector<Ray> created;
        Bits common(words);
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
                std::size_t cnt = 0;
                for (auto w : common) cnt += static_cast<std::size_t>(std::popcount(w));
                if (cnt + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (contains_all(rays[r].zero, common)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.z.resize(d);
                const Integer& vp = value[p];
                const Integer vq = -value[q];
                for (std::size_t i = 0; i < d; ++i) nr.z[i] = vp * rays[q].z[i] + vq * rays[p].z[i];
                make_primitive(nr.z);
                nr.zero = common;
                set_bit(nr.zero, idx);
                created.push_back(std::move(nr));
                if (rays.size() - neg.size() + created.size() > opts.ray_budget) {
                    throw BudgetExceededError(opts.ray_budget, rays.size() - neg.size() + created.size());
                }
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = sgn(value[i]);
            if (s < 0) continue;
            if (s == 0) set_bit(rays[i].zero, idx);
            next.push_back(std::move(rays[i]));
        }
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
        out.peak_rays = std::max(out.peak_rays, rays.size());
    }

    const std::size_t n = h.dimension;
    for (const auto& r : rays) {
        const Integer& t = r.z[n];
        if (sgn(t) > 0) {
            RatVector v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = Rational(r.z[i], t);
                v[i].canonicalize();
            }
            out.vertices.push_back(std::move(v));
        } else {
            out.rays.push_back(to_rational(IntVector(r.z.begin(), r.z.begin() + static_cast<std::ptrdiff_t>(n))));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());

    for (const auto& v : out.vertices) {
        if (!feasible(h, v)) throw InvariantViolation("enumerated vertex violates a row");
        if (tight_rank(h, v) != n) throw InvariantViolation("enumerated vertex is not tight on a full-rank subsystem");
    }
    for (const auto& r : out.rays) {
        HRep cone{h.dimension, {}};
        for (const auto& hs : h.rows) cone.rows.push_back({hs.a, Rational(0)});
        if (!feasible(cone, r)) throw InvariantViolation("enumerated ray leaves the recession cone");
    }
    return out;
}

}  // namespace cutdom
