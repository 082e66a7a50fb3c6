#pragma once

#include <memory>
#include <random>
#include <vector>

#include "hypercf/poly.hpp"
#include "hypercf/series.hpp"

namespace hypercf {

// Y^2 = F = A^2 + 4R with A monic of degree g+1 (no X^g term) and R of degree g.
struct CurveSpec {
    int genus = 0;
    Poly A, R, F;

    // Leading coefficient of R (the X^g coefficient).
    Rational u() const { return R.coeff(genus); }

    // Validates the shape of A and R. `allow_degenerate_r` admits R with vanishing
    // X^g coefficient (including R = 0).
    static std::shared_ptr<const CurveSpec> make(int genus, Poly A, Poly R, bool allow_degenerate_r = false);
};

struct SeedLine {
    Poly P0, Q0;
};

// One line of the expansion, with its derived scalars.
// Q = u (X^g - v X^(g-1) + ...), P = A + 2 d X^(g-1) + ...
struct CFLine {
    long n = 0;
    Poly P, Q;
    Rational u, v, d;
    std::vector<Rational> pi;   // coefficients X^0..X^(g-1) of P - A
    std::vector<Rational> rho;  // coefficients X^0..X^(g-1) of Q / u
};

enum class Branch { infinity1, infinity2 };

// Immutable snapshot of the expansion at line n: holds P_n, Q_n and Q_(n-1).
class ExpansionState {
public:
    // Checks the seed and derives Q_(-1) = (F - P0^2) / Q0.
    static ExpansionState validate(std::shared_ptr<const CurveSpec> curve, const SeedLine& seed);

    long index() const { return n_; }
    const CurveSpec& curve() const { return *curve_; }
    std::shared_ptr<const CurveSpec> curve_ptr() const { return curve_; }
    const Poly& P() const { return P_; }
    const Poly& Q() const { return Q_; }
    const Poly& Q_prev() const { return Qprev_; }

    Rational u() const { return Q_.coeff(curve_->genus); }
    Rational v() const;
    Rational d() const;
    Rational u_prev() const { return Qprev_.coeff(curve_->genus); }
    // Coefficient of X^j in P_n - A.
    Rational pi(int j) const;
    // Coefficient of X^j in Q_n / u_n.
    Rational rho(int j) const;
    // Coefficient of X^j in Q_(n-1) / u_(n-1).
    Rational rho_prev(int j) const;

    CFLine line() const;

    // Line n+1; SingularStep when u_n = 0.
    ExpansionState forward() const;
    // Line n-1; SingularStep when u_(n-1) = 0.
    ExpansionState backward() const;

private:
    ExpansionState(std::shared_ptr<const CurveSpec> c, long n, Poly P, Poly Q, Poly Qprev)
        : curve_(std::move(c)), n_(n), P_(std::move(P)), Q_(std::move(Q)), Qprev_(std::move(Qprev)) {}

    std::shared_ptr<const CurveSpec> curve_;
    long n_ = 0;
    Poly P_, Q_, Qprev_;
};

// Lines n, n+1, ..., n+count-1 starting from `s`.
std::vector<CFLine> expand_forward(const ExpansionState& s, std::size_t count);
// Lines n-1, n-2, ..., n-count.
std::vector<CFLine> expand_backward(const ExpansionState& s, std::size_t count);

// Series of the tail function at line n, to X^-order:
//  infinity1: (Y - P_(n+1)) / Q_n with Y ~ +X^(g+1);
//  infinity2: (Y + P_n) / Q_n with Y ~ -X^(g+1).
LaurentSeries expand_G(const ExpansionState& s, std::size_t order, Branch branch);

// Y_n = (Y + P_n) / Q_n on the branch Y ~ +X^(g+1), known to X^-order.
LaurentSeries complete_quotient(const ExpansionState& s, std::size_t order);

struct CurveAndSeed {
    std::shared_ptr<const CurveSpec> curve;
    SeedLine seed;
};

// Random curve and seed with small integer data. Q0 divides F - P0^2 by
// construction; u != 0 is guaranteed.
CurveAndSeed random_curve_seed(int genus, std::mt19937_64& rng, int bound = 3);

// Redraws until `forward` lines forward and `backward` lines backward exist with
// every d nonzero, so the Hankel determinants on both sides are nonvanishing.
CurveAndSeed random_regular_curve_seed(int genus, std::mt19937_64& rng, std::size_t forward, std::size_t backward,
                                       int bound = 3, int attempts = 100);
// The genus-1 quartic with A = X^2 - 3, R = -(X + 2), P0 = X^2 - 1, Q0 = -2(X + 1).
CurveAndSeed genus1_quartic_example();
// The genus-2 sextic with A = X^3 - 5X - 1, R = -(X^2 + 2X + 3),
// P0 = X^3 - 5X/2 + 1/2, Q0 = -4(X^2 + X/2 - 3/2).
CurveAndSeed genus2_sextic_example();

}  // namespace hypercf
