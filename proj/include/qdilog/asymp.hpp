#pragma once
#include <string>
#include <vector>

#include "qdilog/mellin.hpp"

namespace qdilog {

enum class Regime { q_to_1, q_to_0 };
enum class Provenance { closed_form, residue_oracle };
enum class Q0Part { ci, si, combined };

struct ExpansionTerm {
    long power;
    Complex coeff;
};

// Truncated asymptotic expansion: terms sorted by ascending power, one term
// per power. remainder_exponent records the contour-derived order of the
// dropped remainder.
struct AsymptoticExpansion {
    std::vector<ExpansionTerm> terms;
    Regime regime;
    int order = 0;
    long remainder_exponent = 0;
    Provenance provenance;
};

// q -> 1 (x -> 0) expansion of Li2(omega, e^{-x}): powers -1 .. N.
// closed_form assembles Gamma-residue x zeta(-n,z) x F(theta,1-n); the
// residue_oracle integrates g around each pole.
AsymptoticExpansion q1_expansion(const Complex& zparam, const ThetaParam& theta, int N,
                                 Provenance provenance, const PrecisionContext& ctx);

// q -> 0 (x -> infinity). Ci part powers -2,-4,..,-2N; Si part powers
// -1,-3,..,-(2N+1); combined = ci + i*si on the union of powers.
AsymptoticExpansion q0_expansion(const Complex& zparam, const ThetaParam& theta, int N,
                                 Q0Part part, Provenance provenance, const PrecisionContext& ctx);

Complex eval_expansion(const AsymptoticExpansion& e, const Real& x, const PrecisionContext& ctx);

// Least-squares slope of log(err) against log(x). Callers exclude samples at
// the precision floor first.
double empirical_order(const std::vector<Real>& xs, const std::vector<Real>& errs);

// Truncation order minimizing the first dropped term at this x, N <= 40.
int optimal_truncation(const Complex& zparam, const ThetaParam& theta, const Real& x,
                       Regime regime, const PrecisionContext& ctx);

// CSV rows "power,coeff_re,coeff_im,provenance", sorted by power.
std::string expansion_csv(const AsymptoticExpansion& e, int digits);

// Printed closed-form candidates, kept separate for oracle
// adjudication.
Complex q1_coeff_printed(int n, const Complex& zparam, const ThetaParam& theta,
                       const PrecisionContext& ctx);
Complex q1_coeff_corrected(int n, const Complex& zparam, const ThetaParam& theta,
                           const PrecisionContext& ctx);
Complex q0_ci_coeff_printed(int k, const Complex& zparam, const ThetaParam& theta,
                          const PrecisionContext& ctx);
Complex q0_si_coeff_printed(int k, const Complex& zparam, const ThetaParam& theta,
                          const PrecisionContext& ctx);
// Candidates for the printed Si 1/x constant: (4 gamma/pi) B2(theta) and the
// -(4 psi(z)/pi) B2(theta) variant suggested by the zeta(s,z) Laurent data.
Complex q0_si_leading_printed(const ThetaParam& theta, const PrecisionContext& ctx);
Complex q0_si_leading_psi_variant(const Complex& zparam, const ThetaParam& theta,
                                  const PrecisionContext& ctx);

}  // namespace qdilog
