#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypercf/rational.hpp"

namespace hypercf {

struct Mismatch {
    std::string check;
    long index = 0;
    std::string detail;
};

// Outcome of an exact verification: number of checks made and every failure.
struct Report {
    std::string name;
    std::size_t checks = 0;
    std::vector<Mismatch> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool condition, const std::string& check, long index, const std::string& detail = {});
    void expect_equal(const std::string& check, long index, const Rational& lhs, const Rational& rhs);
    void expect_zero(const std::string& check, long index, const Rational& value);
    void merge(const Report& other);
};

}  // namespace hypercf
