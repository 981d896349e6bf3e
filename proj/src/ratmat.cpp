#include "cutdom/ratmat.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cutdom {

namespace {

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

// In-place fraction-free elimination; returns the rank. Every intermediate
// entry is a minor of the input, so the division by the previous pivot is exact.
std::size_t bareiss_rank(std::vector<IntVector>& a, std::size_t cols)
{
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::optional<std::size_t> bareiss_rank_i64(std::vector<std::vector<long long>> a, std::size_t cols)
{
    using wide = __int128;
    constexpr wide lo = std::numeric_limits<long long>::min();
    constexpr wide hi = std::numeric_limits<long long>::max();
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                wide t = wide(a[r][c]) * a[i][j] - wide(a[i][c]) * a[r][j];
                t /= prev;
                if (t < lo || t > hi) return std::nullopt;
                a[i][j] = static_cast<long long>(t);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

RatVector to_rational(const IntVector& v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

RatMatrix::RatMatrix(std::vector<RatVector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols)
{
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    }
}

RatMatrix::RatMatrix(std::vector<RatVector> rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    *this = RatMatrix(std::move(rows), cols);
}

RatMatrix RatMatrix::transpose() const
{
    std::vector<RatVector> t(cols_, RatVector(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t[j][i] = rows_[i][j];
    return RatMatrix(std::move(t), rows_.size());
}

std::size_t rank(std::vector<IntVector> rows, std::size_t cols)
{
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("rank: ragged rows");
    }
    return bareiss_rank(rows, cols);
}

std::size_t rank(const RatMatrix& m)
{
    std::vector<IntVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer l = common_denominator(m.row(i));
        IntVector r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * l;
            r[j] = scaled.get_num();
        }
        rows.push_back(std::move(r));
    }
    return bareiss_rank(rows, m.cols());
}

std::size_t rank_small(const std::vector<std::vector<long long>>& rows, std::size_t cols)
{
    if (auto r = bareiss_rank_i64(rows, cols)) return *r;
    std::vector<IntVector> big;
    big.reserve(rows.size());
    for (const auto& r : rows) {
        IntVector v;
        v.reserve(cols);
        for (long long x : r) v.emplace_back(static_cast<long>(x));
        big.push_back(std::move(v));
    }
    return bareiss_rank(big, cols);
}

bool solve_square(const RatMatrix& a, const RatVector& b, RatVector& x)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
    std::vector<RatVector> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = a.row(i);
        m[i].push_back(b[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return true;
}

bool operator==(const IntegerForm& a, const IntegerForm& b)
{
    return a.rhs == b.rhs && a.coefficients == b.coefficients;
}

bool operator<(const IntegerForm& a, const IntegerForm& b)
{
    if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
    return a.rhs < b.rhs;
}

Integer common_denominator(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

void make_primitive(IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntegerForm minimum_integer_form(const RatVector& c, const Rational& rhs)
{
    if (rhs <= 0) throw std::invalid_argument("minimum_integer_form: right-hand side must be positive");
    bool nonzero = false;
    for (const auto& x : c) {
        if (x < 0) throw std::invalid_argument("minimum_integer_form: negative coefficient");
        if (x != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("minimum_integer_form: zero coefficient vector");

    RatVector all = c;
    all.push_back(rhs);
    const Integer l = common_denominator(all);
    IntVector scaled;
    scaled.reserve(all.size());
    for (const auto& x : all) {
        Rational s = x * l;
        scaled.push_back(s.get_num());
    }
    make_primitive(scaled);
    IntegerForm form;
    form.rhs = scaled.back();
    scaled.pop_back();
    form.coefficients = std::move(scaled);
    return form;
}

int compare(const RatVector& a, const RatVector& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp(a[i], b[i]); c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

}  // namespace cutdom
