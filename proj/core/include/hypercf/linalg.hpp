#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypercf/rational.hpp"

namespace hypercf {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

// Fraction-free Gaussian elimination with row pivoting.
Integer bareiss_determinant(IntegerMatrix m);

// Scales each row to integers and runs Bareiss.
Rational determinant(const RationalMatrix& m);

// Leading principal minors det(m[0..k, 0..k]) for k = 0..n, entry 0 being 1.
// Stops early (shorter result) if a leading minor vanishes.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

// Dodgson condensation; nullopt when an interior minor used as a divisor is zero.
std::optional<Rational> condensation_determinant(const RationalMatrix& m);

// Basis of {x : m x = 0} from the reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Row-reduces a set of vectors; rows are ordered by increasing leading index.
std::vector<std::vector<Rational>> echelon_rows(std::vector<std::vector<Rational>> rows);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);

}  // namespace hypercf
