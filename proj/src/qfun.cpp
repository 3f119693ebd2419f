#include "qdilog/qfun.hpp"

#include <cmath>
#include <memory>

namespace qdilog {

namespace {

Real two_pi(mpfr_prec_t bits) { return Real::pi(bits) * 2L; }

}  // namespace

QParam::QParam(const Real& q, const PrecisionContext& ctx) : q_(q) {
    const Real one(1L, ctx.bits());
    if (!(q > Real(0L, ctx.bits())) || !(q < one))
        throw DomainError("q must lie strictly inside (0,1)");
}

QParam::QParam(double q, const PrecisionContext& ctx) : QParam(ctx.make(q), ctx) {}

ExponentialParam::ExponentialParam(const Real& x, const Complex& zparam, const ThetaParam& theta,
                                   const PrecisionContext& ctx)
    : x_(x), z_(zparam), theta_(theta) {
    if (!(x > Real(0L, ctx.bits()))) throw DomainError("x must be positive");
    if (!(zparam.re > Real(1L, ctx.bits()))) throw DomainError("Re zparam must exceed 1");
}

QParam ExponentialParam::q(const PrecisionContext& ctx) const {
    return QParam(exp(-to_prec(x_, ctx.bits())), ctx);
}

Complex ExponentialParam::omega(const PrecisionContext& ctx) const {
    const mpfr_prec_t bits = ctx.bits();
    Real xb = to_prec(x_, bits);
    Complex zb = to_prec(z_, bits);
    Complex expo =
        -(zb * Complex(xb)) + Complex(Real(0L, bits), two_pi(bits) * to_prec(theta_.value(), bits));
    return exp(expo);
}

Real q_pochhammer(const QParam& q, long n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("q_pochhammer: n must be >= 0");
    const mpfr_prec_t bits = ctx.bits();
    Real qv = to_prec(q.value(), bits);
    Real acc(1L, bits);
    Real qk(1L, bits);
    for (long k = 1; k <= n; ++k) {
        qk *= qv;
        acc *= Real(1L, bits) - qk;
    }
    return acc;
}

Complex q_log(const Complex& z, const QParam& q, const PrecisionContext& ctx, long* terms_used) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real qv = to_prec(q.value(), bits);
    Complex zz = to_prec(z, bits);
    if (zz.is_zero()) {
        if (terms_used) *terms_used = 0;
        return Complex(Real(0L, bits));
    }

    Real az = abs(zz);
    // pole guard: z within 10^(-digits+2) relative of q^{-n}, n >= 0
    if (az >= one - ctx.tol(2)) {
        double t = (log(az) / -log(qv)).to_double();
        for (long n = std::max(0L, static_cast<long>(std::floor(t)) - 1);
             n <= static_cast<long>(std::ceil(t)) + 1; ++n) {
            Real qn = pow_si(qv, -n);
            if (abs(zz - Complex(qn)) <= ctx.tol(2) * qn)
                throw PoleError("q_log: z within tolerance of pole q^-" + std::to_string(n), n);
        }
    }

    if (az < one) {
        // direct series sum z^n/(1-q^n)
        struct St {
            Complex zp;
            Real qn;
        };
        auto st = std::make_shared<St>(St{Complex(one), one});
        auto term = [st, zz, qv, bits](long) {
            st->zp = st->zp * zz;
            st->qn = st->qn * qv;
            return st->zp / (Real(1L, bits) - st->qn);
        };
        auto tail = [az, qv, one](long n) {
            return pow_si(az, n + 1) / ((one - qv) * (one - az));
        };
        auto r = sum_series(term, tail, 1, ctx);
        if (terms_used) *terms_used = r.terms_used;
        return r.value;
    }

    // continuation: z sum_{m>=0} q^m/(1 - z q^m); head until |z| q^m <= 1/2
    long m0 = 0;
    {
        Real bound = az;
        Real half("0.5", bits);
        while (bound > half) {
            bound = bound * qv;
            ++m0;
        }
    }
    CompensatedSum head(bits);
    Real qm(1L, bits);
    for (long m = 0; m < m0; ++m) {
        head.add(Complex(qm) / (Complex(one) - zz * Complex(qm)));
        qm *= qv;
    }
    // tail from m0: |z q^m| <= 1/2 so each term is bounded by 2 q^m
    struct St2 {
        Real qm;
    };
    auto st2 = std::make_shared<St2>(St2{qm});
    auto term2 = [st2, zz, qv, one](long) {
        Complex t = Complex(st2->qm) / (Complex(one) - zz * Complex(st2->qm));
        st2->qm = st2->qm * qv;
        return t;
    };
    auto tail2 = [st2, qv, one](long) { return st2->qm * 2L / (one - qv); };
    auto r = sum_series(term2, tail2, m0, ctx);
    if (terms_used) *terms_used = r.terms_used + m0;
    return zz * (head.value() + r.value);
}

Complex q_polylog(int n, const Complex& z, const QParam& q, const PrecisionContext& ctx,
                  long* terms_used) {
    if (n < 1) throw DomainError("q_polylog: order must be >= 1");
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real qv = to_prec(q.value(), bits);
    Complex zz = to_prec(z, bits);
    if (zz.is_zero()) {
        if (terms_used) *terms_used = 0;
        return Complex(Real(0L, bits));
    }
    Real az = abs(zz);
    if (!(az < one)) throw DomainError("q_polylog: requires |z| < 1");

    // Li_1 = q_log (k^0) and Li_2 is the q-dilogarithm (k^1): the k-exponent
    // is n-1, pinned by the integral recursion Li_n = int Li_{n-1}/t dt.
    struct St {
        Complex zp;
        Real qk;
    };
    auto st = std::make_shared<St>(St{Complex(one), one});
    auto term = [st, zz, qv, n, bits](long k) {
        st->zp = st->zp * zz;
        st->qk = st->qk * qv;
        Real kn = pow_si(Real(k, bits), n - 1);
        return st->zp / (kn * (Real(1L, bits) - st->qk));
    };
    auto tail = [az, qv, one, n](long k) {
        Real div = (n >= 2) ? Real(k + 1, az.prec()) : Real(1L, az.prec());
        return pow_si(az, k + 1) / (div * (one - qv) * (one - az));
    };
    auto r = sum_series(term, tail, 1, ctx);
    if (terms_used) *terms_used = r.terms_used;
    return r.value;
}

Complex euler_series(const Complex& z, const QParam& q, const PrecisionContext& ctx,
                     long* terms_used) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real qv = to_prec(q.value(), bits);
    Complex zz = to_prec(z, bits);
    Real az = abs(zz);
    if (!(az < one)) throw DomainError("euler_series: requires |z| < 1");

    // lower bound for (q;q)_infty: (q;q)_m (1 - q^{m+1}/(1-q)) with m large
    // enough that the correction factor is >= 1/2
    Real pocmin(1L, bits);
    {
        Real thresh = (one - qv) / 2L;
        long m = 0;
        Real poc(1L, bits);
        while (pow_si(qv, m + 1) > thresh) {
            ++m;
            poc *= one - pow_si(qv, m);
        }
        pocmin = poc * (one - pow_si(qv, m + 1) / (one - qv));
    }

    struct St {
        Complex zp;
        Real poch;
        Real qn;
    };
    auto st = std::make_shared<St>(St{Complex(one), one, one});
    auto term = [st, zz, qv, bits](long n) {
        if (n == 0) return Complex(Real(1L, bits));
        st->zp = st->zp * zz;
        st->qn = st->qn * qv;
        st->poch = st->poch * (Real(1L, bits) - st->qn);
        return st->zp / st->poch;
    };
    auto tail = [az, pocmin, one](long n) {
        return pow_si(az, n + 1) / (pocmin * (one - az));
    };
    auto r = sum_series(term, tail, 0, ctx);
    if (terms_used) *terms_used = r.terms_used;
    return r.value;
}

Complex jackson_integral(const std::function<Complex(const Complex&)>& f, const Complex& z,
                         const QParam& q, const PrecisionContext& ctx,
                         const std::function<Real(long)>& tail_bound) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real qv = to_prec(q.value(), bits);
    Complex zz = to_prec(z, bits);

    struct St {
        Real qn;
        Real fmax;
    };
    auto st = std::make_shared<St>(St{one, Real(0L, bits)});
    auto term = [st, &f, zz, qv](long) {
        Complex arg = zz * Complex(st->qn);
        Complex fv = f(arg);
        Real fa = abs(fv);
        if (fa > st->fmax) st->fmax = fa;
        Complex v = fv * st->qn;
        st->qn = st->qn * qv;
        return v;
    };
    std::function<Real(long)> tail = tail_bound;
    if (!tail) {
        tail = [st, qv, one](long) {
            return max(st->fmax, Real(1L, one.prec())) * st->qn / (one - qv);
        };
    }
    auto r = sum_series(term, tail, 0, ctx);
    return Complex(one - qv) * zz * r.value;
}

std::pair<Complex, Complex> q_clausen_pair(const ExponentialParam& p, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real x = to_prec(p.x(), bits);
    Complex z = to_prec(p.zparam(), bits);
    Real theta = to_prec(p.theta().value(), bits);
    Real qv = exp(-x);

    Complex w = exp(-(z * Complex(x)));  // e^{-z x}, |w| < q
    Real r = abs(w);
    Complex rot = cis(two_pi(bits) * theta);

    const Real eps = ctx.eps();
    CompensatedSum ci(bits), si(bits);
    Complex wn(one);
    Complex phase(one);
    Real qn(1L, bits);
    const long cap = series_max_terms();
    for (long n = 1; n <= cap; ++n) {
        wn = wn * w;
        phase = phase * rot;
        qn = qn * qv;
        Complex base = wn / (Real(n, bits) * (one - qn));
        ci.add(base * Complex(phase.re));
        si.add(base * Complex(phase.im));
        Real bound = pow_si(r, n + 1) / ((one - qv) * (one - r));
        Real scale = max(one, max(abs(ci.value()), abs(si.value())));
        if (bound <= eps * scale) return {ci.value(), si.value()};
    }
    throw NonConvergenceError("q_clausen_pair: iteration cap exceeded", cap, "");
}

std::vector<Complex> limit_probe_q1(const Complex& z, const std::vector<QParam>& qs,
                                    const PrecisionContext& ctx) {
    // (1-q) Li_2(z, q) -> Li_2(z) as q -> 1 (and -> -log(1-z) as q -> 0):
    // the (1-q)/(1-q^n) factors tend to 1/n termwise.
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    std::vector<Complex> out;
    out.reserve(qs.size());
    Complex zz = to_prec(z, bits);
    if (!(abs(zz) < one) && !zz.is_zero())
        throw DomainError("limit_probe_q1: requires |z| < 1");
    for (const auto& q : qs) {
        Real qv = to_prec(q.value(), bits);
        out.push_back(Complex(one - qv) * q_polylog(2, zz, q, ctx));
    }
    return out;
}

}  // namespace qdilog
