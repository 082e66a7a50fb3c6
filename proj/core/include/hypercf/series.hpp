#pragma once

#include <cstddef>
#include <vector>

#include "hypercf/poly.hpp"

namespace hypercf {

// Truncated Laurent series in 1/X.
// coeffs()[i] multiplies X^(top - i); the series is exact modulo O(X^error_exponent())
// where error_exponent() == top - size. Leading coefficients may be zero.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int top, std::vector<Rational> coeffs) : top_(top), c_(std::move(coeffs)) {}

    // A polynomial viewed as a series known modulo O(X^error_exponent).
    static LaurentSeries from_poly(const Poly& p, int error_exponent);

    int top() const { return top_; }
    std::size_t size() const { return c_.size(); }
    int error_exponent() const { return top_ - static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of X^exponent; zero above top, throws if below the known range.
    Rational coeff(int exponent) const;

    // Drops leading zero coefficients (reduces top and size together).
    LaurentSeries normalized() const;
    // Keeps only exponents above the given one.
    LaurentSeries truncated(int error_exponent) const;
    // Terms with non-negative exponent; requires error_exponent() < 0.
    Poly polynomial_part() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const Rational& s, LaurentSeries a);

private:
    int top_ = 0;
    std::vector<Rational> c_;
};

LaurentSeries operator+(const LaurentSeries& a, const Poly& p);
LaurentSeries operator-(const LaurentSeries& a, const Poly& p);
LaurentSeries operator*(const LaurentSeries& a, const Poly& p);

// Multiplicative inverse at full available precision. The input must have a
// nonzero known coefficient.
LaurentSeries series_invert(const LaurentSeries& s);
// Inverse carrying every term down to X^-order; throws InsufficientData when the
// input is not precise enough.
LaurentSeries series_invert(const LaurentSeries& s, int order);
LaurentSeries series_divide(const LaurentSeries& a, const LaurentSeries& b);

// Square root of a monic polynomial of even degree 2m: `terms` coefficients
// starting at X^m with leading coefficient one.
LaurentSeries sqrt_series(const Poly& f, std::size_t terms);

// Coefficients of X^-1 .. X^-N of a series with no polynomial part.
struct LaurentTail {
    std::vector<Rational> coeffs;  // coeffs[j] multiplies X^-(j+1)
    std::size_t order() const { return coeffs.size(); }
};

// Extracts the tail down to X^-order; the series must be known that far and
// have vanishing polynomial part.
LaurentTail to_tail(const LaurentSeries& s, std::size_t order);

}  // namespace hypercf
