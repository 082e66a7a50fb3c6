#include "hypercf/linalg.hpp"

namespace hypercf {

namespace {

Integer lcm_of_denominators(const RationalMatrix& m, std::size_t r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    return l;
}

IntegerMatrix clear_denominators(const RationalMatrix& m, Rational& scale) {
    IntegerMatrix out(m.rows(), m.cols());
    scale = Rational(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = lcm_of_denominators(m, r);
        scale *= Rational(l);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).raw();
            Integer v = q.get_num() * (l / q.get_den());
            out(r, c) = v;
        }
    }
    return out;
}

}  // namespace

Integer bareiss_determinant(IntegerMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error("determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    Integer d = m(n - 1, n - 1);
    return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const RationalMatrix& m) {
    Rational scale;
    IntegerMatrix im = clear_denominators(m, scale);
    return Rational(bareiss_determinant(std::move(im))) / scale;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error("leading minors of a non-square matrix");
    std::vector<Integer> rowscale(n);
    IntegerMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        rowscale[r] = lcm_of_denominators(m, r);
        for (std::size_t c = 0; c < n; ++c) {
            const mpq_class& q = m(r, c).raw();
            a(r, c) = q.get_num() * (rowscale[r] / q.get_den());
        }
    }
    // Without pivoting, the k-th Bareiss pivot is the (k+1)-th leading minor.
    std::vector<Rational> out{Rational(1)};
    Rational scale(1);
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        scale *= Rational(rowscale[k]);
        if (a(k, k) == 0) {
            out.push_back(Rational());
            return out;
        }
        out.push_back(Rational(a(k, k)) / scale);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return out;
}

std::optional<Rational> condensation_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error("determinant of a non-square matrix");
    if (n == 0) return Rational(1);
    // prev holds the (k-1)x(k-1) connected minors, cur the k x k ones.
    RationalMatrix prev(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) prev(i, j) = Rational(1);
    RationalMatrix cur = m;
    for (std::size_t size = n; size > 1; --size) {
        RationalMatrix next(size - 1, size - 1);
        for (std::size_t i = 0; i + 1 < size; ++i) {
            for (std::size_t j = 0; j + 1 < size; ++j) {
                const Rational& div = prev(i + 1, j + 1);
                if (div.is_zero()) return std::nullopt;
                next(i, j) = (cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j)) / div;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur(0, 0);
}

namespace {

// In-place RREF over the rationals; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);
        Rational inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RationalMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix a = m;
    return rref(a).size();
}

std::vector<std::vector<Rational>> echelon_rows(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return rows;
    RationalMatrix a(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = rows[r].at(c);
    auto pivots = rref(a);
    std::vector<std::vector<Rational>> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Rational> v(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) v[c] = a(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
    RationalMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

}  // namespace hypercf
