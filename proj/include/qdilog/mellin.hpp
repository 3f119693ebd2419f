#pragma once
#include <functional>

#include "qdilog/qfun.hpp"
#include "qdilog/specfun.hpp"

namespace qdilog {

// Vertical-line contour: abscissa c, truncation height T, node spacing h.
struct ContourSpec {
    Real c;
    Real height;
    Real step;

    // node-count cap and positivity checks
    void validate(const PrecisionContext& ctx) const;
};

struct QuadResult {
    Complex value;
    Real truncation_estimate;
    long nodes = 0;
    Real peak;  // largest |f(s) x^{-s}| seen; scales the attainable accuracy
};

// g(s) = zeta(s,z) F(theta, s+1) Gamma(s); poles at s = 1, 0, -1, -2, ...
// Raises PoleError within 10^(-digits+2) of the pole set.
Complex integrand_g(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                    const PrecisionContext& ctx);

// Integrands of the Ci/Si Barnes representations (including the averaging
// factor 1/2 that the printed forms drop; see tests):
//   ci: -(1/2) (2 pi)^{s+1} zeta(s,z) / (2 s sin(pi s/2)) {zeta(-s,th)+zeta(-s,1-th)}
//   si: +(1/2) (2 pi)^{s+1} zeta(s,z) / (2 s cos(pi s/2)) {zeta(-s,th)-zeta(-s,1-th)}
Complex integrand_ci(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                     const PrecisionContext& ctx);
Complex integrand_si(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                     const PrecisionContext& ctx);

// (1/2 pi i) Int f(s) x^{-s} ds along Re s = c, trapezoid with tail cut.
// Throws DivergenceError when samples grow toward the truncation height.
QuadResult vertical_line_integral(const std::function<Complex(const Complex&)>& f,
                                  const ContourSpec& spec, const Real& x,
                                  const PrecisionContext& ctx);

// Barnes representations with automatic (T, h) refinement to the context
// tolerance. Abscissa constraints: c > 1 for li2; 1 < c < 2 for ci2/si2.
QuadResult barnes_li2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx);
QuadResult barnes_ci2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx);
QuadResult barnes_si2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx);

struct ResidueTerm {
    Complex pole;
    Complex value;
    Real radius;
};

// Residue by trapezoid quadrature over a circle; validated by node doubling
// and radius halving (throws ResidueInstabilityError when unstable: higher
// order pole or singularity inside the contour).
ResidueTerm residue_at(const std::function<Complex(const Complex&)>& f, const Complex& pole,
                       const Real& radius, long nodes, const PrecisionContext& ctx);

// Context defaults: radius 1/4, nodes max(64, 4*digits).
long residue_default_nodes(const PrecisionContext& ctx);

}  // namespace qdilog
