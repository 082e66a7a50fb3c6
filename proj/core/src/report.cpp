#include "hypercf/report.hpp"

namespace hypercf {

void Report::expect(bool condition, const std::string& check, long index, const std::string& detail) {
    ++checks;
    if (!condition) failures.push_back({check, index, detail});
}

void Report::expect_equal(const std::string& check, long index, const Rational& lhs, const Rational& rhs) {
    ++checks;
    if (lhs != rhs) failures.push_back({check, index, lhs.to_string() + " != " + rhs.to_string()});
}

void Report::expect_zero(const std::string& check, long index, const Rational& value) {
    ++checks;
    if (!value.is_zero()) failures.push_back({check, index, "residual " + value.to_string()});
}

void Report::merge(const Report& other) {
    checks += other.checks;
    for (const auto& f : other.failures) {
        Mismatch m = f;
        if (!other.name.empty()) m.check = other.name + "/" + m.check;
        failures.push_back(std::move(m));
    }
}

}  // namespace hypercf
