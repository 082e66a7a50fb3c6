#include "hypercf/dual.hpp"

#include <algorithm>

namespace hypercf {

namespace {

void grow(std::vector<Rational>& v, std::size_t n) {
    if (v.size() < n) v.resize(n);
}

}  // namespace

Dual Dual::variable(const Rational& value, std::size_t index, std::size_t count) {
    std::vector<Rational> d(count);
    d.at(index) = Rational(1);
    return Dual(value, std::move(d));
}

bool Dual::is_zero() const {
    return value_.is_zero() &&
           std::all_of(derivs_.begin(), derivs_.end(), [](const Rational& r) { return r.is_zero(); });
}

Dual Dual::operator-() const {
    Dual r(-value_, derivs_);
    for (auto& x : r.derivs_) x = -x;
    return r;
}

Dual& Dual::operator+=(const Dual& o) {
    value_ += o.value_;
    grow(derivs_, o.derivs_.size());
    for (std::size_t i = 0; i < o.derivs_.size(); ++i) derivs_[i] += o.derivs_[i];
    return *this;
}

Dual& Dual::operator-=(const Dual& o) {
    value_ -= o.value_;
    grow(derivs_, o.derivs_.size());
    for (std::size_t i = 0; i < o.derivs_.size(); ++i) derivs_[i] -= o.derivs_[i];
    return *this;
}

Dual& Dual::operator*=(const Dual& o) {
    if (&o == this) return *this *= Dual(o);
    // (a + a'e)(b + b'e) = ab + (a'b + ab')e
    for (auto& x : derivs_) x *= o.value_;
    grow(derivs_, o.derivs_.size());
    for (std::size_t i = 0; i < o.derivs_.size(); ++i) derivs_[i] += value_ * o.derivs_[i];
    value_ *= o.value_;
    return *this;
}

Dual& Dual::operator/=(const Dual& o) {
    if (&o == this) return *this /= Dual(o);
    if (o.value_.is_zero()) throw DivisionByZero("dual division by a zero value");
    Rational inv = o.value_.inverse();
    Rational q = value_ * inv;
    // (a/b)' = (a' - q b') / b
    grow(derivs_, o.derivs_.size());
    for (std::size_t i = 0; i < derivs_.size(); ++i) {
        Rational ob = i < o.derivs_.size() ? o.derivs_[i] : Rational();
        derivs_[i] = (derivs_[i] - q * ob) * inv;
    }
    value_ = q;
    return *this;
}

bool operator==(const Dual& a, const Dual& b) {
    if (a.value_ != b.value_) return false;
    std::size_t n = std::max(a.derivs_.size(), b.derivs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.deriv(i) != b.deriv(i)) return false;
    return true;
}

std::vector<Dual> dual_variables(std::span<const Rational> point) {
    std::vector<Dual> xs;
    xs.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) xs.push_back(Dual::variable(point[i], i, point.size()));
    return xs;
}

std::string describe_point(std::span<const Rational> point) {
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += ", ";
        s += "x" + std::to_string(i) + "=" + point[i].to_string();
    }
    return s + ")";
}

Gradient dual_eval(const DualFunction& f, std::span<const Rational> point) {
    auto xs = dual_variables(point);
    try {
        Dual r = f(xs);
        Gradient g{r.value(), r.derivs()};
        g.gradient.resize(point.size());
        return g;
    } catch (const DivisionByZero&) {
        throw PoleError("pole at " + describe_point(point));
    }
}

}  // namespace hypercf
