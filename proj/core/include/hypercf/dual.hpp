#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hypercf/rational.hpp"

namespace hypercf {

// First-order forward-mode dual number over the rationals.
// An empty derivative vector stands for the zero gradient.
class Dual {
public:
    Dual() = default;
    Dual(const Rational& value) : value_(value) {}
    template <std::signed_integral I>
        requires(sizeof(I) <= sizeof(long))
    Dual(I n) : value_(n) {}
    Dual(Rational value, std::vector<Rational> derivs)
        : value_(std::move(value)), derivs_(std::move(derivs)) {}

    static Dual variable(const Rational& value, std::size_t index, std::size_t count);

    const Rational& value() const noexcept { return value_; }
    const std::vector<Rational>& derivs() const noexcept { return derivs_; }
    Rational deriv(std::size_t i) const { return i < derivs_.size() ? derivs_[i] : Rational(); }
    bool is_zero() const;

    Dual operator-() const;
    Dual& operator+=(const Dual& o);
    Dual& operator-=(const Dual& o);
    Dual& operator*=(const Dual& o);
    Dual& operator/=(const Dual& o);

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

    // Compares value and gradient.
    friend bool operator==(const Dual& a, const Dual& b);

private:
    Rational value_;
    std::vector<Rational> derivs_;
};

inline bool is_zero(const Dual& x) { return x.is_zero(); }

struct Gradient {
    Rational value;
    std::vector<Rational> gradient;
};

using DualFunction = std::function<Dual(std::span<const Dual>)>;

// Evaluates f and its exact gradient at `point`. A zero denominator becomes a
// PoleError naming the point.
Gradient dual_eval(const DualFunction& f, std::span<const Rational> point);

// Seeds one dual variable per coordinate.
std::vector<Dual> dual_variables(std::span<const Rational> point);

std::string describe_point(std::span<const Rational> point);

}  // namespace hypercf
