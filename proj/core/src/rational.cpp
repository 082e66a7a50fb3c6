#include "hypercf/rational.hpp"

#include <cctype>
#include <ostream>

namespace hypercf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    mpq_class r;
    r.get_num() = num;
    r.get_den() = den;
    return Rational(r);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace hypercf
