#pragma once
#include <functional>
#include <vector>

#include "qdilog/specfun.hpp"

namespace qdilog {

// Deformation parameter, strictly inside (0,1).
class QParam {
public:
    QParam(const Real& q, const PrecisionContext& ctx);
    QParam(double q, const PrecisionContext& ctx);
    const Real& value() const { return q_; }

private:
    Real q_;
};

// Parameters of the exponential substitution: x > 0, Re zparam > 1,
// 0 < theta < 1. q = e^{-x} and omega = e^{-zparam x + 2 pi i theta} are
// derived here so inconsistent (q, x) pairs cannot exist.
class ExponentialParam {
public:
    ExponentialParam(const Real& x, const Complex& zparam, const ThetaParam& theta,
                     const PrecisionContext& ctx);
    const Real& x() const { return x_; }
    const Complex& zparam() const { return z_; }
    const ThetaParam& theta() const { return theta_; }
    QParam q(const PrecisionContext& ctx) const;  // e^{-x}
    Complex omega(const PrecisionContext& ctx) const;

private:
    Real x_;
    Complex z_;
    ThetaParam theta_;
};

// (q;q)_n = prod_{k=1..n} (1 - q^k); (q;q)_0 = 1.
Real q_pochhammer(const QParam& q, long n, const PrecisionContext& ctx);

// Koornwinder q-logarithm: sum z^n/(1-q^n) for |z|<1, continued to
// z sum_{m>=0} q^m/(1 - z q^m) elsewhere. Poles at z = q^{-n}.
Complex q_log(const Complex& z, const QParam& q, const PrecisionContext& ctx,
              long* terms_used = nullptr);

// Li_n(z, q) = sum z^k / (k^n (1-q^k)), |z| < 1, n >= 1.
Complex q_polylog(int n, const Complex& z, const QParam& q, const PrecisionContext& ctx,
                  long* terms_used = nullptr);

// sum z^n/(q;q)_n, |z| < 1; equals exp(Li_2(z,q)).
Complex euler_series(const Complex& z, const QParam& q, const PrecisionContext& ctx,
                     long* terms_used = nullptr);

// Jackson q-integral (1-q) z sum f(z q^n) q^n. tail_bound, when given, must
// bound |sum over m > n of f(z q^m) q^m|; the default assumes |f| bounded on
// the orbit by its observed maximum.
Complex jackson_integral(const std::function<Complex(const Complex&)>& f, const Complex& z,
                         const QParam& q, const PrecisionContext& ctx,
                         const std::function<Real(long)>& tail_bound = nullptr);

// q-Clausen pair: Ci2 = sum e^{-n z x} cos(2 pi n theta)/(n(1-q^n)), Si2 the
// sine analogue; computed by the direct cosine/sine sums (the Li2(omega,q)
// reassembly is a separate route used in tests).
std::pair<Complex, Complex> q_clausen_pair(const ExponentialParam& p, const PrecisionContext& ctx);

// (1-q) Li_2(z, q) for each q: raw sequence values for convergence-trend
// probing against Li_2(z) (q up to 1) or -log(1-z) (q down to 0).
std::vector<Complex> limit_probe_q1(const Complex& z, const std::vector<QParam>& qs,
                                    const PrecisionContext& ctx);

}  // namespace qdilog
