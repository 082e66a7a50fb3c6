#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

namespace {

// Permutation expansion; exponential but independent of elimination.
Rational leibniz(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

RationalMatrix random_matrix(std::size_t n, std::mt19937_64& rng, bool fractions) {
    std::uniform_int_distribution<long> num(-7, 7), den(1, fractions ? 5 : 1);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
    EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("-10/5").to_string(), "-2");
    EXPECT_EQ(Rational::parse("0/7").to_string(), "0");
    EXPECT_TRUE(Rational::parse("12/4").is_integer());
}

TEST(Rational, ParseRejectsGarbage) {
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational::parse("6/-4"), ParseError);
}

TEST(Rational, ArithmeticAndPowers) {
    Rational a(3, 4), b(-5, 6);
    EXPECT_EQ(a + b, Rational(-1, 12));
    EXPECT_EQ(a * b, Rational(-5, 8));
    EXPECT_EQ(a / b, Rational(-9, 10));
    EXPECT_EQ(a.pow(-2), Rational(16, 9));
    EXPECT_EQ(Rational(0).pow(0), Rational(1));
    EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
    EXPECT_LT(b, a);
}

TEST(Rational, LargeValuesStayExact) {
    Integer big("123456789012345678901234567890");
    Rational x(big, Integer(7));
    EXPECT_EQ(x * Rational(7), Rational(big));
    EXPECT_EQ((x - x).sign(), 0);
}

TEST(Determinant, AgreesWithPermutationExpansion) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            auto m = random_matrix(n, rng, rep % 2 == 1);
            EXPECT_EQ(determinant(m), leibniz(m)) << "n=" << n;
        }
}

TEST(Determinant, BareissOnIntegers) {
    IntegerMatrix m(3, 3);
    const long v[3][3] = {{0, 2, 1}, {3, 0, -1}, {4, 5, 6}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = v[i][j];
    // 0*(0+5) - 2*(18+4) + 1*(15-0)
    EXPECT_EQ(bareiss_determinant(m), Integer(-29));
}

TEST(Determinant, SingularAndEmpty) {
    RationalMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(static_cast<long>(i + j));
    EXPECT_TRUE(determinant(m).is_zero());
    EXPECT_EQ(determinant(RationalMatrix(0, 0)), Rational(1));
}

TEST(Determinant, CondensationWhenDefined) {
    std::mt19937_64 rng(2);
    int used = 0;
    // Small entries make interior zeros common; only defined cases are compared.
    for (int rep = 0; rep < 40; ++rep) {
        auto m = random_matrix(5, rng, true);
        if (auto c = condensation_determinant(m)) {
            EXPECT_EQ(*c, leibniz(m));
            ++used;
        }
    }
    EXPECT_GT(used, 3);
}

TEST(Determinant, LeadingMinors) {
    std::mt19937_64 rng(3);
    auto m = random_matrix(4, rng, false);
    auto minors = leading_principal_minors(m);
    ASSERT_GE(minors.size(), 1u);
    EXPECT_EQ(minors[0], Rational(1));
    for (std::size_t k = 1; k < minors.size(); ++k) {
        RationalMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        EXPECT_EQ(minors[k], leibniz(sub));
    }
}

TEST(Nullspace, VectorsAreAnnihilated) {
    std::mt19937_64 rng(4);
    auto a = random_matrix(3, rng, true);
    RationalMatrix m(4, 6);
    // Rows 3 is a combination of rows 0 and 1; columns 3..5 repeat 0..2 scaled.
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i) {
            m(i, j) = a(i, j);
            m(i, j + 3) = a(i, j) * Rational(2);
        }
        m(3, j) = a(0, j) - a(1, j);
        m(3, j + 3) = m(3, j) * Rational(2);
    }
    auto basis = nullspace(m);
    EXPECT_EQ(rank(m) + basis.size(), 6u);
    for (const auto& x : basis)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational acc;
            for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
            EXPECT_TRUE(acc.is_zero());
        }
}

TEST(Matrix, MultiplyTranspose) {
    std::mt19937_64 rng(5);
    auto a = random_matrix(3, rng, true), b = random_matrix(3, rng, true);
    EXPECT_EQ(transpose(multiply(a, b)), multiply(transpose(b), transpose(a)));
    EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
}

TEST(Dual, ExactGradient) {
    // f(x, y) = x^2 y / (x - y)
    DualFunction f = [](std::span<const Dual> x) { return x[0] * x[0] * x[1] / (x[0] - x[1]); };
    std::vector<Rational> p{Rational(3), Rational(1)};
    auto g = dual_eval(f, p);
    EXPECT_EQ(g.value, Rational(9, 2));
    // df/dx = (2xy(x-y) - x^2 y)/(x-y)^2 = (12 - 9)/4, df/dy = (x^2(x-y) + x^2 y)/(x-y)^2 = 27/4
    EXPECT_EQ(g.gradient[0], Rational(3, 4));
    EXPECT_EQ(g.gradient[1], Rational(27, 4));
    std::vector<Rational> pole{Rational(2), Rational(2)};
    EXPECT_THROW(dual_eval(f, pole), PoleError);
}

TEST(Parallel, OrderIndependentOfScheduling) {
    auto v = parallel_map(50, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
    EXPECT_THROW(parallel_map(5, [](std::size_t i) -> int { if (i == 3) throw Error("x"); return 0; }), Error);
}
