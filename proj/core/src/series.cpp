#include "hypercf/series.hpp"

#include <algorithm>
#include <ostream>

namespace hypercf {

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw Error("interpolate: size mismatch");
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly{-xs[j], Rational(1)};
            denom *= xs[i] - xs[j];
        }
        result += basis * (ys[i] / denom);
    }
    return result;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string mag = abs(c).to_string();
        if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) s += "-";
        bool unit = abs(c) == Rational(1);
        if (i == 0) s += mag;
        else {
            if (!unit) s += mag + "*";
            s += i == 1 ? "X" : "X^" + std::to_string(i);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

LaurentSeries LaurentSeries::from_poly(const Poly& p, int error_exponent) {
    int top = std::max(p.degree(), error_exponent + 1);
    std::vector<Rational> c;
    for (int e = top; e > error_exponent; --e) c.push_back(p.coeff(e));
    return LaurentSeries(top, std::move(c));
}

Rational LaurentSeries::coeff(int exponent) const {
    if (exponent > top_) return Rational();
    if (exponent <= error_exponent())
        throw InsufficientData(static_cast<std::size_t>(top_ - exponent + 1),
                               "series coefficient of X^" + std::to_string(exponent) + " is beyond truncation");
    return c_[static_cast<std::size_t>(top_ - exponent)];
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return LaurentSeries(top_ - static_cast<int>(k), std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

LaurentSeries LaurentSeries::truncated(int error_exponent) const {
    if (error_exponent < this->error_exponent())
        throw InsufficientData(static_cast<std::size_t>(top_ - error_exponent), "cannot extend series precision");
    if (error_exponent >= top_) return LaurentSeries(error_exponent + 1, {});
    return LaurentSeries(top_, std::vector<Rational>(c_.begin(), c_.begin() + (top_ - error_exponent)));
}

Poly LaurentSeries::polynomial_part() const {
    if (error_exponent() >= 0) throw InsufficientData(static_cast<std::size_t>(top_ + 1), "polynomial part not fully known");
    std::vector<Rational> c;
    for (int e = 0; e <= top_; ++e) c.push_back(coeff(e));
    return Poly(std::move(c));
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int top = std::max(a.top(), b.top());
    int err = std::max(a.error_exponent(), b.error_exponent());
    std::vector<Rational> c;
    for (int e = top; e > err; --e) c.push_back(a.coeff(e) + b.coeff(e));
    return LaurentSeries(top, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int top = a.top() + b.top();
    int err = std::max(a.top() + b.error_exponent(), b.top() + a.error_exponent());
    std::size_t n = top > err ? static_cast<std::size_t>(top - err) : 0;
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            if (i < a.size() && k - i < b.size() && !a.coeffs()[i].is_zero())
                c[k] += a.coeffs()[i] * b.coeffs()[k - i];
    return LaurentSeries(top, std::move(c));
}

LaurentSeries operator*(const Rational& s, LaurentSeries a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

LaurentSeries operator+(const LaurentSeries& a, const Poly& p) {
    return a + LaurentSeries::from_poly(p, a.error_exponent());
}
LaurentSeries operator-(const LaurentSeries& a, const Poly& p) {
    return a - LaurentSeries::from_poly(p, a.error_exponent());
}
LaurentSeries operator*(const LaurentSeries& a, const Poly& p) {
    // An exact factor keeps the relative precision of `a`.
    return a * LaurentSeries::from_poly(p, p.degree() + a.error_exponent() - a.top());
}

LaurentSeries series_invert(const LaurentSeries& s) {
    LaurentSeries n = s.normalized();
    if (n.size() == 0) throw DivisionByZero("series has no known nonzero coefficient");
    const auto& a = n.coeffs();
    Rational inv0 = a[0].inverse();
    std::vector<Rational> b(a.size());
    b[0] = inv0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (!a[i].is_zero()) acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return LaurentSeries(-n.top(), std::move(b));
}

LaurentSeries series_invert(const LaurentSeries& s, int order) {
    LaurentSeries inv = series_invert(s);
    return inv.truncated(-order - 1);
}

LaurentSeries series_divide(const LaurentSeries& a, const LaurentSeries& b) { return a * series_invert(b); }

LaurentSeries sqrt_series(const Poly& f, std::size_t terms) {
    if (f.degree() < 0 || f.degree() % 2 != 0 || f.leading() != Rational(1))
        throw Error("sqrt_series needs a monic polynomial of even degree");
    int m = f.degree() / 2;
    std::vector<Rational> c(terms);
    if (terms == 0) return LaurentSeries(m, {});
    c[0] = Rational(1);
    // (sum c_k X^(m-k))^2 = f  =>  2 c_k = f_(2m-k) - sum_{0<i<k} c_i c_(k-i)
    for (std::size_t k = 1; k < terms; ++k) {
        Rational acc = f.coeff(2 * m - static_cast<int>(k));
        for (std::size_t i = 1; i < k; ++i) acc -= c[i] * c[k - i];
        c[k] = acc / Rational(2);
    }
    return LaurentSeries(m, std::move(c));
}

LaurentTail to_tail(const LaurentSeries& s, std::size_t order) {
    for (int e = s.top(); e >= 0; --e)
        if (!s.coeff(e).is_zero()) throw Error("series has a polynomial part");
    LaurentTail t;
    for (std::size_t j = 1; j <= order; ++j) t.coeffs.push_back(s.coeff(-static_cast<int>(j)));
    return t;
}

}  // namespace hypercf
