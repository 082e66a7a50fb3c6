#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypercf/dual.hpp"
#include "hypercf/rational.hpp"

namespace hypercf {

// Dense univariate polynomial, coefficients in ascending degree.
// Invariant: no trailing zero coefficients, so the zero polynomial is empty.
template <class T>
class BasicPoly {
public:
    BasicPoly() = default;
    explicit BasicPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    BasicPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static BasicPoly constant(const T& value) { return BasicPoly(std::vector<T>{value}); }
    static BasicPoly monomial(const T& value, int degree) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1);
        c.back() = value;
        return BasicPoly(std::move(c));
    }
    static BasicPoly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const T> coeffs() const { return c_; }
    T coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : T(); }
    T leading() const { return c_.empty() ? T() : c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    T operator()(const T& x) const { return eval(x); }

    BasicPoly derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return BasicPoly(std::move(d));
    }

    BasicPoly operator-() const {
        BasicPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    BasicPoly& operator+=(const BasicPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (hypercf::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return BasicPoly(std::move(r));
    }
    friend BasicPoly operator*(const T& s, BasicPoly a) {
        for (auto& x : a.c_) x = s * x;
        a.trim();
        return a;
    }
    friend BasicPoly operator*(BasicPoly a, const T& s) { return s * std::move(a); }
    friend BasicPoly operator/(BasicPoly a, const T& s) {
        for (auto& x : a.c_) x /= s;
        a.trim();
        return a;
    }
    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && hypercf::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using Poly = BasicPoly<Rational>;
using DualPoly = BasicPoly<Dual>;

// Euclidean division: a = q*b + r with deg r < deg b.
template <class T>
std::pair<BasicPoly<T>, BasicPoly<T>> divmod(const BasicPoly<T>& a, const BasicPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {BasicPoly<T>(), a};
    std::vector<T> quo(static_cast<std::size_t>(dq) + 1);
    T lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        T c = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {BasicPoly<T>(std::move(quo)), BasicPoly<T>(std::move(rem))};
}

// Division that must leave no remainder; throws otherwise.
template <class T>
BasicPoly<T> exact_div(const BasicPoly<T>& a, const BasicPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

// Taylor shift: returns a(X + c).
template <class T>
BasicPoly<T> shift(const BasicPoly<T>& a, const T& c) {
    BasicPoly<T> acc;
    BasicPoly<T> lin{c, T(1)};
    auto cs = a.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lin + BasicPoly<T>::constant(*it);
    return acc;
}

template <class T, class U>
BasicPoly<U> poly_cast(const BasicPoly<T>& a) {
    std::vector<U> c;
    for (const auto& x : a.coeffs()) c.push_back(U(x));
    return BasicPoly<U>(std::move(c));
}

// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hypercf
