#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hypercf/errors.hpp"

namespace hypercf {

using Integer = mpz_class;

// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
        requires(sizeof(I) <= sizeof(long))
    Rational(I n) : q_(static_cast<long>(n)) {}

    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) {}

    // Accepts "p", "-p", "p/q" and "-p/q" in base 10.
    static Rational parse(std::string_view text);

    // "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rational inverse() const;
    // Integer power; negative exponents invert first.
    Rational pow(long exponent) const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace hypercf
