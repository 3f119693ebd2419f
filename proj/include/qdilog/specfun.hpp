#pragma once
#include <utility>

#include "qdilog/bernoulli.hpp"
#include "qdilog/series.hpp"

namespace qdilog {

// Strictly interior angle parameter: 0 < theta < 1, endpoints rejected with a
// 10^(-digits) margin (the functional equation degenerates at integers).
class ThetaParam {
public:
    ThetaParam(const Real& theta, const PrecisionContext& ctx);
    ThetaParam(double theta, const PrecisionContext& ctx);
    const Real& value() const { return theta_; }

private:
    Real theta_;
};

Real factorial(unsigned long n, mpfr_prec_t bits);

// Gamma function for complex argument: argument-shifted Stirling series,
// reflection for Re s < 1/2. Poles at the non-positive integers.
Complex gamma(const Complex& s, const PrecisionContext& ctx);

// Hurwitz zeta, Euler-Maclaurin continuation; simple pole at s = 1 only.
Complex hurwitz_zeta(const Complex& s, const Complex& z, const PrecisionContext& ctx);

// d/ds of hurwitz_zeta (differentiated Euler-Maclaurin). Needed for the
// functional-equation limit at integer s.
Complex hurwitz_zeta_ds(const Complex& s, const Complex& z, const PrecisionContext& ctx);

// Riemann zeta via zeta(s, 1).
Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx);

// Periodic zeta F(theta, s) = sum e^{2 pi i n theta} / n^s, entire in s.
// Dispatches between the series-route expansion (near/at positive integer s)
// and the Lerch functional equation elsewhere.
Complex periodic_zeta(const ThetaParam& theta, const Complex& s, const PrecisionContext& ctx);

// Series route: Hurwitz-series expansion of Li_s(e^{2 pi i theta}) about the
// exponent 0 (geometric convergence after the theta <-> 1-theta reduction).
// Independent of the functional-equation route; this is the "direct series"
// side of the Lerch residual.
Complex periodic_zeta_series(const ThetaParam& theta, const Complex& s,
                             const PrecisionContext& ctx);

// Functional-equation route (Lerch). Valid off the positive integers.
Complex periodic_zeta_lerch(const ThetaParam& theta, const Complex& s,
                            const PrecisionContext& ctx);

// Polylogarithm. |z| < 1 direct series; on the unit circle delegates to
// periodic_zeta (requires Re s > 1 there).
Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx);

// Clausen pair (Ci_s(theta), Si_s(theta)) with Li_s(e^{i theta}) = Ci + i Si.
std::pair<Complex, Complex> clausen_pair(const Complex& s, const Real& theta_angle,
                                         const PrecisionContext& ctx);

// psi^{(n)}(z) = (-1)^{n+1} n! zeta(n+1, z), n >= 1.
Complex polygamma(int n, const Complex& z, const PrecisionContext& ctx);

// psi(z) = Gamma'(z)/Gamma(z): shifted Stirling series, reflection on the
// left half-plane.
Complex digamma(const Complex& z, const PrecisionContext& ctx);

// Bernoulli polynomial B_n(z) by binomial expansion over the exact table.
Complex bernoulli_poly(int n, const Complex& z, const PrecisionContext& ctx);

// Apostol-Bernoulli polynomial B_n(x, lambda): coefficient of t^n/n! in
// t e^{x t} / (lambda e^t - 1), by truncated power-series division.
// lambda == 1 delegates to bernoulli_poly.
Complex apostol_bernoulli(int n, const Complex& x, const Complex& lambda,
                          const PrecisionContext& ctx);

// LHS - RHS of the Lerch functional equation, both sides computed through
// independent routes. Requires Re s > 1. Near zero iff the implementation is
// consistent.
Complex lerch_residual(const ThetaParam& theta, const Complex& s, const PrecisionContext& ctx);

}  // namespace qdilog
