#include "hypercf/somos.hpp"

#include "hypercf/linalg.hpp"

namespace hypercf {

namespace {

constexpr std::size_t kTrainMargin = 2;
constexpr std::size_t kMinVerifyRows = 5;

std::vector<Rational> product_row(const IndexedSeq& seq, long n, int k) {
    std::vector<Rational> row;
    for (int i = 0; i <= k / 2; ++i) row.push_back(seq.at(n + k - i) * seq.at(n + i));
    return row;
}

RationalMatrix stack_rows(const IndexedSeq& seq, long n0, long n1, int k) {
    RationalMatrix m(static_cast<std::size_t>(n1 - n0 + 1), static_cast<std::size_t>(k / 2 + 1));
    for (long n = n0; n <= n1; ++n) {
        auto row = product_row(seq, n, k);
        for (std::size_t c = 0; c < row.size(); ++c) m(static_cast<std::size_t>(n - n0), c) = row[c];
    }
    return m;
}

// Relation of minimal order within span(basis): the echelon row with most leading zeros.
std::vector<Rational> shortest_in_span(const std::vector<std::vector<Rational>>& basis) {
    auto rows = echelon_rows(basis);
    return rows.back();
}

}  // namespace

Rational somos_residual(const SomosRelation& rel, const IndexedSeq& seq, long n) {
    Rational acc;
    for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
        if (rel.coefficients[i].is_zero()) continue;
        long ii = static_cast<long>(i);
        acc += rel.coefficients[i] * seq.at(n + rel.k - ii) * seq.at(n + ii);
    }
    return acc;
}

std::optional<long> somos_first_violation(const SomosRelation& rel, const IndexedSeq& seq, long n0, long n1) {
    for (long n = n0; n <= n1; ++n)
        if (!somos_residual(rel, seq, n).is_zero()) return n;
    return std::nullopt;
}

std::vector<Rational> normalize_coefficients(std::vector<Rational> c) {
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> ints;
    for (const auto& x : c) {
        Integer v = x.numerator() * (l / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (g == 0) return c;
    int sign = 0;
    for (const auto& v : ints)
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    std::vector<Rational> out;
    for (const auto& v : ints) out.emplace_back(Integer(v * sign / g));
    return out;
}

SomosRelation somos4_verify(const IndexedSeq& tau, const Rational& f, const Rational& u, const Rational& v) {
    Rational alpha = u * u;
    Rational beta = u * u * (v * v + f);
    SomosRelation rel{4, {Rational(1), -alpha, -beta}, tau.first, tau.last() - 4};
    if (rel.window_last < rel.window_first) throw InsufficientData(5, "Somos-4 check needs at least 5 terms");
    if (auto bad = somos_first_violation(rel, tau, rel.window_first, rel.window_last))
        throw RelationViolation(*bad, "Somos-4 relation fails at n = " + std::to_string(*bad));
    return rel;
}

Report qrt_check(std::span<const Rational> d, const Rational& f, const Rational& u, const Rational& v) {
    Report r;
    r.name = "qrt";
    Rational alpha = u * u;
    Rational beta = u * u * (v * v + f);
    for (std::size_t n = 1; n + 1 < d.size(); ++n)
        r.expect_equal("qrt", static_cast<long>(n), d[n + 1] * d[n - 1] * d[n] * d[n], alpha * d[n] + beta);
    return r;
}

std::vector<Rational> quadratic_recurrence_moments(const Rational& alpha, const Rational& beta,
                                                   const Rational& gamma, const Rational& t0, const Rational& t1,
                                                   std::size_t count) {
    std::vector<Rational> t{t0, t1};
    t.resize(std::min<std::size_t>(count, 2));
    for (std::size_t j = 2; j < count; ++j) {
        Rational conv;
        for (std::size_t i = 0; i + 2 <= j; ++i) conv += t[i] * t[j - 2 - i];
        t.push_back(alpha * t[j - 1] + beta * t[j - 2] + gamma * conv);
    }
    return t;
}

QuadraticBridge quadratic_bridge(const ExpansionState& line0, std::size_t N) {
    ExpansionState line1 = line0.forward();
    QuadraticBridge b;
    b.t0 = line1.u() / Rational(2);
    b.t1 = -b.t0 * (line0.v() + line1.v());
    b.alpha = Rational(-2) * line0.v();
    b.beta = line0.d() - line1.d();
    b.gamma = line1.d() / b.t0;
    b.moments = quadratic_recurrence_moments(b.alpha, b.beta, b.gamma, b.t0, b.t1, 2 * N);
    b.hankel = hankel_table(b.moments, N).delta;
    b.expected = hankel_table(moments_forward(line0, 2 * N), N).delta;
    b.report.name = "quadratic-bridge";
    for (std::size_t n = 0; n <= N; ++n) b.report.expect_equal("hankel", static_cast<long>(n), b.hankel[n], b.expected[n]);
    return b;
}

Somos8Detection somos8_detect(const IndexedSeq& tau) {
    Somos8Detection det;
    // Largest run of nonzero terms.
    long best_first = 0, best_len = 0, run_first = tau.first, run_len = 0;
    for (long n = tau.first; n <= tau.last(); ++n) {
        if (tau.at(n).is_zero()) {
            run_len = 0;
            run_first = n + 1;
            continue;
        }
        if (++run_len > best_len) {
            best_len = run_len;
            best_first = run_first;
        }
    }
    if (best_len < 13) throw InsufficientData(13, "Somos-8 detection needs 13 consecutive nonzero terms");
    IndexedSeq clean{best_first,
                     std::vector<Rational>(tau.values.begin() + (best_first - tau.first),
                                           tau.values.begin() + (best_first - tau.first) + best_len)};
    det.clean_first = clean.first;
    det.clean_last = clean.last();

    auto row = [&](long start) { return product_row(clean, start, 8); };
    // Center n uses tau_(n-4) .. tau_(n+8).
    for (long n = clean.first + 4; n + 8 <= clean.last(); ++n) {
        CasoratiWindow w;
        w.center = n;
        RationalMatrix m(5, 5);
        for (std::size_t r = 0; r < 5; ++r) {
            auto pr = row(n - 4 + static_cast<long>(r));
            for (std::size_t c = 0; c < 5; ++c) m(r, c) = pr[c];
        }
        w.determinant = determinant(m);
        for (std::size_t j = 0; j < 5; ++j) {
            RationalMatrix minor(4, 4);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0, cc = 0; c < 5; ++c)
                    if (c != j) minor(r, cc++) = m(r, c);
            w.minors[j] = determinant(minor);
        }
        det.windows.push_back(w);
    }
    det.determinants_vanish = true;
    for (const auto& w : det.windows) det.determinants_vanish = det.determinants_vanish && w.determinant.is_zero();
    det.minor_ratios_constant = true;
    for (std::size_t i = 0; i + 1 < det.windows.size(); ++i) {
        const auto& a = det.windows[i].minors;
        const auto& b = det.windows[i + 1].minors;
        for (std::size_t j = 1; j < 5; ++j)
            if (a[j] * b[0] != b[j] * a[0]) det.minor_ratios_constant = false;
    }

    const long first_row = clean.first, last_row = clean.last() - 8;
    const long total_rows = last_row - first_row + 1;
    const long train = std::min<long>(total_rows, 5 + static_cast<long>(kTrainMargin));
    RationalMatrix fit = stack_rows(clean, first_row, first_row + train - 1, 8);
    auto basis = nullspace(fit);
    det.nullity = basis.size();
    det.training_rows = static_cast<std::size_t>(train);
    if (basis.empty()) return det;
    std::vector<Rational> v = shortest_in_span(basis);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    SomosRelation rel;
    rel.k = 8 - 2 * static_cast<int>(lead);
    rel.coefficients = normalize_coefficients(std::vector<Rational>(v.begin() + static_cast<long>(lead), v.end()));
    // A shorter relation at row n is a relation of order k starting at n + lead.
    rel.window_first = first_row + static_cast<long>(lead);
    rel.window_last = last_row + static_cast<long>(lead);
    if (somos_first_violation(rel, clean, rel.window_first, rel.window_last)) return det;
    det.verified_rows = static_cast<std::size_t>(total_rows - train);
    det.relation = rel;
    return det;
}

std::size_t somos_k_required_length(int kmax) {
    return static_cast<std::size_t>(kmax) + static_cast<std::size_t>(kmax / 2 + 1) + kTrainMargin + kMinVerifyRows;
}

std::optional<SomosRelation> somos_k_find(const IndexedSeq& tau, int kmax) {
    const long L = static_cast<long>(tau.values.size());
    for (int k = 4; k <= kmax; ++k) {
        const long cols = k / 2 + 1;
        const long rows = L - k;
        const long train = cols + static_cast<long>(kTrainMargin);
        if (rows < train + static_cast<long>(kMinVerifyRows))
            throw InsufficientData(somos_k_required_length(k),
                                   "testing Somos-" + std::to_string(k) + " needs " +
                                       std::to_string(somos_k_required_length(k)) + " terms");
        RationalMatrix fit = stack_rows(tau, tau.first, tau.first + train - 1, k);
        auto basis = nullspace(fit);
        if (basis.empty()) continue;
        SomosRelation rel;
        rel.k = k;
        rel.coefficients = normalize_coefficients(shortest_in_span(basis));
        rel.window_first = tau.first;
        rel.window_last = tau.first + rows - 1;
        if (!somos_first_violation(rel, tau, rel.window_first, rel.window_last)) return rel;
    }
    return std::nullopt;
}

}  // namespace hypercf
