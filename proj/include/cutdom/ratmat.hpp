#pragma once

// Exact rational scalars, vectors and matrices.
//
// Rational and Integer are GMP's mpq_class / mpz_class. mpq_class keeps its
// value canonical (positive denominator, gcd 1) as long as every value is
// produced by arithmetic or by parse_rational, which canonicalizes.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cutdom {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

RatVector to_rational(const IntVector& v);

class RatMatrix {
public:
    RatMatrix() = default;
    /// Throws std::invalid_argument if a row length differs from `cols`.
    RatMatrix(std::vector<RatVector> rows, std::size_t cols);
    explicit RatMatrix(std::vector<RatVector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const RatVector& row(std::size_t i) const { return rows_[i]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    RatMatrix transpose() const;

private:
    std::vector<RatVector> rows_;
    std::size_t cols_ = 0;
};

/// Dimension of the row space over Q. Rows are cleared of denominators and
/// reduced by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Rank of an integer matrix given as rows of equal length `cols`.
std::size_t rank(std::vector<IntVector> rows, std::size_t cols);

/// Rank of a 0/1 or small-integer matrix; exact, with an internal overflow
/// check that falls back to arbitrary precision.
std::size_t rank_small(const std::vector<std::vector<long long>>& rows, std::size_t cols);

/// Writes the unique solution of the square system A x = b into x; returns
/// false if A is singular.
bool solve_square(const RatMatrix& a, const RatVector& b, RatVector& x);

struct IntegerForm {
    IntVector coefficients;
    Integer rhs;
};

bool operator==(const IntegerForm& a, const IntegerForm& b);
bool operator<(const IntegerForm& a, const IntegerForm& b);

/// Scales (c, rhs) by the unique positive rational t that makes every entry
/// integral with collective gcd 1. Requires rhs > 0 and c >= 0, c != 0;
/// throws std::invalid_argument otherwise.
IntegerForm minimum_integer_form(const RatVector& c, const Rational& rhs);

/// Smallest positive integer L with L*v integral.
Integer common_denominator(const RatVector& v);

/// Divides v by the gcd of its entries (no-op on the zero vector).
void make_primitive(IntVector& v);

int compare(const RatVector& a, const RatVector& b);

}  // namespace cutdom
