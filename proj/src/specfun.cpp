#include "qdilog/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <vector>

namespace qdilog {

namespace {

Real two_pi(mpfr_prec_t bits) { return Real::pi(bits) * 2L; }

// Nearest integer to Re s and the distance |s - n|.
long nearest_int(const Complex& s, Real& dist) {
    Real r = round_nearest(s.re);
    long n = r.to_long();
    dist = abs(s - Complex(Real(n, s.prec())));
    return n;
}

int digits_lost(const Real& dist) {
    if (dist.sign() <= 0) return 40;
    double d = -log10(dist).to_double();
    if (d < 0) return 0;
    if (d > 40) return 40;
    return static_cast<int>(std::ceil(d));
}

// ---- log cache for Euler-Maclaurin base points -------------------------
// Contour quadrature evaluates zeta(s, z) for fixed z and thousands of s
// values; log(z + k) does not depend on s, so cache it per (z, precision).

struct LogCacheEntry {
    bool used = false;
    mpfr_prec_t bits = 0;
    Complex z;
    std::vector<Complex> logs;  // logs[k] = log(z + k)
};

thread_local std::array<LogCacheEntry, 8> g_log_cache;
thread_local unsigned g_log_cache_clock = 0;

bool same_value(const Complex& a, const Complex& b) {
    return mpfr_equal_p(a.re.raw(), b.re.raw()) && mpfr_equal_p(a.im.raw(), b.im.raw());
}

const std::vector<Complex>& cached_logs(const Complex& z, mpfr_prec_t bits, long m) {
    LogCacheEntry* slot = nullptr;
    for (auto& e : g_log_cache) {
        if (e.used && e.bits == bits && same_value(e.z, z)) {
            slot = &e;
            break;
        }
    }
    if (!slot) {
        slot = &g_log_cache[g_log_cache_clock++ % g_log_cache.size()];
        slot->used = true;
        slot->bits = bits;
        slot->z = z;
        slot->logs.clear();
    }
    while (static_cast<long>(slot->logs.size()) < m) {
        long k = static_cast<long>(slot->logs.size());
        slot->logs.push_back(log(z + Complex(Real(k, bits))));
    }
    return slot->logs;
}

// ---- Euler-Maclaurin core ----------------------------------------------

struct EmParams {
    long m;       // shift
    long j_max;   // correction-term cap
};

EmParams em_params(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    // The correction terms decay like ((|s|+2j)/(2 pi (M+Re z)))^2 per j, so
    // M must scale with both the working digits and |s|.
    double work = ctx.work_digits();
    double mag = abs(s).to_double();
    double im = abs(s.im).to_double();
    double rez = z.re.to_double();
    double m = 0.8 * work;
    if (1.25 * im > m) m = 1.25 * im;
    if (0.62 * (mag + 10.0) > m) m = 0.62 * (mag + 10.0);
    if (2.0 - rez > 0) m += 2.0 - rez;
    long mm = static_cast<long>(std::ceil(m)) + 1;
    if (mm < 4) mm = 4;
    if (mm > 2000000) throw NonConvergenceError("hurwitz_zeta: shift too large", 0, "");
    long jm = static_cast<long>(std::ceil(1.9 * work)) + 16;
    return {mm, jm};
}

void check_hurwitz_domain(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    Real d(s.prec());
    long n = nearest_int(s, d);
    if (n == 1 && d <= ctx.work_tol(2))
        throw PoleError("hurwitz_zeta: pole at s=1", 1);
    Real dz(z.prec());
    Real rz = round_nearest(z.re);
    long nz = rz.to_long();
    dz = abs(z - Complex(Real(nz, z.prec())));
    if (nz <= 0 && dz <= ctx.work_tol(2))
        throw DomainError("hurwitz_zeta: z at non-positive integer");
}

// Euler-Maclaurin evaluation; when want_ds is true computes d/ds instead.
// For Re s < 0 the head sum grows like M^{-Re s} while the result stays
// moderate, so the working precision is padded by the cancelled digits.
Complex hurwitz_em_raw(const Complex& s, const Complex& z, const PrecisionContext& ctx,
                       bool want_ds);

Complex hurwitz_em(const Complex& s, const Complex& z, const PrecisionContext& ctx,
                   bool want_ds) {
    double sre = s.re.to_double();
    if (sre < -0.5) {
        EmParams p = em_params(s, z, ctx);
        double lost = -sre * (std::log10(static_cast<double>(p.m) + 2.0) + 0.2);
        int extra = static_cast<int>(std::ceil(lost)) + 4;
        if (extra > 600) throw NonConvergenceError("hurwitz_zeta: Re s too negative", 0, "");
        Complex v = hurwitz_em_raw(s, z, ctx.with_extra_guard(extra), want_ds);
        return to_prec(v, ctx.bits());
    }
    return hurwitz_em_raw(s, z, ctx, want_ds);
}

Complex hurwitz_em_raw(const Complex& s, const Complex& z, const PrecisionContext& ctx,
                       bool want_ds) {
    check_hurwitz_domain(s, z, ctx);
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real stop = ctx.work_tol(-2);

    EmParams p = em_params(s, z, ctx);
    for (int attempt = 0; attempt < 4; ++attempt) {
        const long M = p.m;
        const auto& logs = cached_logs(z, bits, M + 1);

        CompensatedSum acc(bits);
        for (long k = 0; k < M; ++k) {
            Complex pk = exp(-(s * logs[static_cast<size_t>(k)]));
            if (want_ds)
                acc.add(-(logs[static_cast<size_t>(k)] * pk));
            else
                acc.add(pk);
        }

        const Complex zM = z + Complex(Real(M, bits));
        const Complex& LM = logs[static_cast<size_t>(M)];
        const Complex pM = exp(-(s * LM));  // (z+M)^{-s}
        const Complex sm1 = s - Complex(one);
        if (want_ds) {
            // d/ds [ (z+M)^{1-s}/(s-1) ] and d/ds [ (z+M)^{-s}/2 ]
            Complex head = zM * pM / sm1;
            acc.add(-(head * LM) - head / sm1);
            acc.add(-(LM * pM) / Real(2L, bits));
        } else {
            acc.add(zM * pM / sm1);
            acc.add(pM / Real(2L, bits));
        }

        // Correction terms B_{2j}/(2j)! * (s)_{2j-1} * (z+M)^{-s-2j+1}
        Complex poch = s;                       // (s)_{2j-1}, starts at s for j=1
        Complex dpoch(Real(1L, bits));          // d/ds (s)_{2j-1}
        Complex cur = pM / zM;                  // (z+M)^{-s-1}
        const Complex inv2 = Real(1L, bits) / (zM * zM);
        Real fact(2L, bits);                    // (2j)!
        bool converged = false;
        for (long j = 1; j <= p.j_max; ++j) {
            Real coef = BernoulliTable::number(static_cast<int>(2 * j), bits) / fact;
            Complex term = (want_ds)
                               ? coef * (dpoch * cur - poch * (LM * cur))
                               : coef * (poch * cur);
            acc.add(term);
            Complex partial = acc.value();
            if (abs(term) <= stop * max(one, abs(partial))) {
                converged = true;
                break;
            }
            // advance to j+1 (product rule keeps dpoch finite at negative
            // integer s where a pochhammer factor vanishes)
            Complex f1 = s + Complex(Real(2 * j - 1, bits));
            Complex f2 = s + Complex(Real(2 * j, bits));
            dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
            poch = poch * f1 * f2;
            cur = cur * inv2;
            fact = fact * Real(2 * j + 1, bits) * Real(2 * j + 2, bits);
        }
        if (converged) {
            Complex v = acc.value();
            ensure_finite(v, "hurwitz_zeta");
            return v;
        }
        p.m = p.m + p.m / 2 + 4;
    }
    throw NonConvergenceError("hurwitz_zeta: Euler-Maclaurin failed to converge", 0, "");
}

// ---- series route for F(theta, s) ---------------------------------------

Complex zeta_int(long n, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    if (n == 1) throw PoleError("zeta: pole at s=1", 1);
    if (n >= 2) return hurwitz_zeta(Complex(Real(n, bits)), Complex(Real(1L, bits)), ctx);
    if (n == 0) return Complex(Real("-0.5", bits));
    long j = -n;  // zeta(-j) = -B_{j+1}/(j+1), j >= 1
    Real b = BernoulliTable::number(static_cast<int>(j + 1), bits);
    return Complex(-(b / Real(j + 1, bits)));
}

// Riemann zeta for any complex w: Euler-Maclaurin on the right half-plane,
// the functional equation on the left (the direct sum there cancels
// catastrophically).
Complex riemann_zeta_any(const Complex& w, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    if (w.re >= Real("-0.5", bits))
        return hurwitz_zeta(w, Complex(one), ctx);
    // zeta(w) = 2^w pi^{w-1} sin(pi w/2) Gamma(1-w) zeta(1-w)
    Complex omw = Complex(one) - w;
    Complex zr = hurwitz_zeta(omw, Complex(one), ctx);
    Complex g = gamma(omw, ctx);
    Complex sn = sin(Complex(Real::pi(bits)) * w / Real(2L, bits));
    Complex pref = exp(w * Complex(log(Real(2L, bits)))) *
                   exp((w - Complex(one)) * Complex(log(Real::pi(bits))));
    return pref * sn * g * zr;
}

// Li_s(e^mu) with mu = 2 pi i t, 0 < t <= 1/2, for s away from the negative
// reals' trouble spots (any s except positive integers handled separately).
Complex li_exp_series(const Real& t, const Complex& s, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real stop = ctx.work_tol(-2);
    const Real tp = two_pi(bits) * t;
    const Complex mu(Real(0L, bits), tp);
    // log(-mu): -mu = tp * e^{-i pi/2}
    const Complex logneg(log(tp), -(Real::pi(bits) / 2L));

    Real dist(bits);
    long m = nearest_int(s, dist);
    const bool at_integer = (m >= 1 && dist <= ctx.work_tol(2));

    const long k_min = 12 + 2 * static_cast<long>(abs(s).to_double());
    const long k_cap = 2500;  // ratio <= 1/2, so ~3.4 terms per digit

    CompensatedSum acc(bits);
    if (at_integer) {
        // Li_m(e^mu) = mu^{m-1}/(m-1)! (H_{m-1} - log(-mu))
        //            + sum_{k != m-1} zeta(m-k) mu^k / k!
        Real H(0L, bits);
        for (long j = 1; j < m; ++j) H += one / Real(j, bits);
        Complex mupow(one);  // mu^k / k!
        acc.add(pow_si(mu, m - 1) / factorial(static_cast<unsigned long>(m - 1), bits) *
                (Complex(H) - logneg));
        int small_run = 0;
        for (long k = 0; k <= k_cap; ++k) {
            if (k != m - 1) {
                long arg = m - k;
                Complex term = (arg < 0 && (arg % 2 == 0))
                                   ? Complex(Real(0L, bits))  // zeta at negative evens
                                   : zeta_int(arg, ctx) * mupow;
                acc.add(term);
                Real ta = abs(term);
                if (k >= k_min && ta <= stop * max(one, abs(acc.value()))) {
                    if (++small_run >= 2) return acc.value();
                } else {
                    small_run = 0;
                }
            }
            mupow = mupow * mu / Real(k + 1, bits);
        }
    } else {
        acc.add(gamma(Complex(one) - s, ctx) * exp((s - Complex(one)) * logneg));
        Complex mupow(one);
        int small_run = 0;
        for (long k = 0; k <= k_cap; ++k) {
            Complex term = riemann_zeta_any(s - Complex(Real(k, bits)), ctx) * mupow;
            acc.add(term);
            Real ta = abs(term);
            if (k >= k_min && ta <= stop * max(one, abs(acc.value()))) {
                if (++small_run >= 2) return acc.value();
            } else {
                small_run = 0;
            }
            mupow = mupow * mu / Real(k + 1, bits);
        }
    }
    throw NonConvergenceError("periodic_zeta_series: expansion did not settle", k_cap, "");
}

}  // namespace

// ---- ThetaParam ----------------------------------------------------------

ThetaParam::ThetaParam(const Real& theta, const PrecisionContext& ctx) : theta_(theta) {
    const Real one(1L, ctx.bits());
    if (!(theta > ctx.eps()) || !(one - theta > ctx.eps()))
        throw DomainError("theta must lie strictly inside (0,1)");
}

ThetaParam::ThetaParam(double theta, const PrecisionContext& ctx)
    : ThetaParam(ctx.make(theta), ctx) {}

Real factorial(unsigned long n, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

// ---- gamma ---------------------------------------------------------------

Complex gamma(const Complex& s, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real half("0.5", bits);

    Real dist(bits);
    long n = nearest_int(s, dist);
    if (n <= 0 && dist <= ctx.work_tol(2))
        throw PoleError("gamma: pole at s=" + std::to_string(n), n);

    if (s.re < half) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
        Complex pis = Complex(Real::pi(bits)) * s;
        Complex denom = sin(pis) * gamma(Complex(one) - s, ctx);
        return Complex(Real::pi(bits)) / denom;
    }

    double target = 0.7 * ctx.digits();
    double t2 = 0.55 * ctx.work_digits() + 5.0;
    if (t2 > target) target = t2;
    long m = 0;
    double res = s.re.to_double();
    if (res < target) m = static_cast<long>(std::ceil(target - res));

    Complex w = s + Complex(Real(m, bits));
    Complex lw = log(w);
    Complex acc = (w - Complex(half)) * lw - w + Complex(log(two_pi(bits)) / 2L);

    // Stirling tail: sum B_{2k} / ((2k)(2k-1) w^{2k-1})
    Complex winv = Real(1L, bits) / w;
    Complex winv2 = winv * winv;
    Complex cur = winv;
    const Real stop = ctx.work_tol(-2);
    for (long k = 1; k <= 600; ++k) {
        Real b = BernoulliTable::number(static_cast<int>(2 * k), bits);
        Complex term = Complex(b / Real((2 * k) * (2 * k - 1), bits)) * cur;
        acc += term;
        if (abs(term) <= stop) break;
        cur = cur * winv2;
    }

    Complex g = exp(acc);
    for (long j = 0; j < m; ++j) g = g / (s + Complex(Real(j, bits)));
    ensure_finite(g, "gamma");
    return g;
}

// ---- hurwitz zeta ----------------------------------------------------------

Complex hurwitz_zeta(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    return hurwitz_em(s, z, ctx, false);
}

Complex hurwitz_zeta_ds(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    return hurwitz_em(s, z, ctx, true);
}

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    return riemann_zeta_any(s, ctx);
}

// ---- periodic zeta ---------------------------------------------------------

Complex periodic_zeta_lerch(const ThetaParam& theta, const Complex& s,
                            const PrecisionContext& ctx) {
    // Cancellation management: near s=0 the two zetas are ~1/|s| and cancel;
    // near s=1 Gamma(1-s) grows while the bracket vanishes.
    Real d0 = abs(s);
    Real d1(s.prec());
    {
        Complex sm1 = s - Complex(Real(1L, s.prec()));
        d1 = abs(sm1);
    }
    int lost = 0;
    if (d0 < Real("0.3", s.prec())) lost = digits_lost(d0);
    if (d1 < Real("0.3", s.prec())) lost = digits_lost(d1);
    {
        // The bracket also vanishes at every integer s >= 2 against the
        // Gamma(1-s) pole.
        Real dm(s.prec());
        long m = nearest_int(s, dm);
        if (m >= 2 && dm < Real("0.3", s.prec())) {
            int l2 = digits_lost(dm);
            if (l2 > lost) lost = l2;
        }
    }
    const PrecisionContext wctx = lost > 0 ? ctx.with_extra_guard(lost + 5) : ctx;

    const mpfr_prec_t bits = wctx.bits();
    const Real one(1L, bits);
    Real tw = to_prec(theta.value(), bits);
    Complex sw = to_prec(s, bits);

    Complex oms = Complex(one) - sw;  // 1 - s
    Complex g = gamma(oms, wctx);
    Complex halfpi(Real(0L, bits), Real::pi(bits) / 2L);
    Complex ph_plus = exp(halfpi * oms);
    Complex ph_minus = exp(-(halfpi * oms));
    Complex za = hurwitz_zeta(oms, Complex(tw), wctx);
    Complex zb = hurwitz_zeta(oms, Complex(one - tw), wctx);
    Complex bracket = ph_plus * za + ph_minus * zb;
    Complex pref = g * exp((sw - Complex(one)) * Complex(log(two_pi(bits))));
    Complex v = pref * bracket;
    ensure_finite(v, "periodic_zeta");
    return v;
}

Complex periodic_zeta_series(const ThetaParam& theta, const Complex& s,
                             const PrecisionContext& ctx) {
    const Real half("0.5", ctx.bits());
    const Real one(1L, ctx.bits());
    const bool flip = theta.value() > half;

    Real dist(s.prec());
    long m = nearest_int(s, dist);
    int lost = 0;
    if (m >= 1 && dist > ctx.work_tol(2) && dist < Real("0.3", s.prec()))
        lost = digits_lost(dist);
    const PrecisionContext wctx = lost > 0 ? ctx.with_extra_guard(lost + 5) : ctx;

    const mpfr_prec_t bits = wctx.bits();
    Real t = to_prec(theta.value(), bits);
    if (flip) t = Real(1L, bits) - t;
    Complex sw = to_prec(s, bits);
    if (flip) sw.im = -sw.im;

    Complex v = li_exp_series(t, sw, wctx);
    if (flip) v = v.conj();
    ensure_finite(v, "periodic_zeta");
    return v;
}

Complex periodic_zeta(const ThetaParam& theta, const Complex& s, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real dist(s.prec());
    long m = nearest_int(s, dist);

    if (dist <= ctx.work_tol(2)) {
        if (m == 1) {
            // F(theta,1) = -log(1 - e^{2 pi i theta})
            Complex w = cis(two_pi(bits) * theta.value());
            return -log(Complex(one) - w);
        }
        if (m == 0) {
            // F(theta,0) = -1/2 + (i/2) cot(pi theta)
            Real pt = Real::pi(bits) * theta.value();
            Real si(bits), co(bits);
            sin_cos(si, co, pt);
            return Complex(-(one / Real(2L, bits)), co / si / Real(2L, bits));
        }
    }
    if (m >= 1 && dist < Real("0.3", bits)) return periodic_zeta_series(theta, s, ctx);
    return periodic_zeta_lerch(theta, s, ctx);
}

// ---- polylog / clausen ------------------------------------------------------

Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    if (z.is_zero()) return Complex(Real(0L, bits));

    Real az = abs(z);
    if (abs(az - one) <= ctx.work_tol(2)) {
        // unit circle: admissible only for Re s > 1
        if (!(s.re > one)) throw DomainError("polylog: |z|=1 requires Re s > 1");
        Real ang = arg(z) / two_pi(bits);
        if (ang.sign() < 0) ang += one;
        if (ang <= ctx.eps() || one - ang <= ctx.eps())
            return hurwitz_zeta(s, Complex(one), ctx);  // z = 1: zeta(s)
        return periodic_zeta(ThetaParam(ang, ctx), s, ctx);
    }
    if (az >= one) throw DomainError("polylog: |z| must be < 1 (or on the circle with Re s > 1)");

    // Fast integer-power path for small integer s.
    Real dist(bits);
    long m = nearest_int(s, dist);
    const bool int_s = dist <= ctx.work_tol(2) && std::labs(m) <= 64;

    const Real g = max(Real(0L, bits), -s.re);
    const double gd = g.to_double();
    const Real huge = Real::pow10(40, bits);

    struct State {
        Complex zp;
        Complex logz;
    };
    auto state = std::make_shared<State>(State{Complex(one), log(z)});

    auto term = [&, state](long n) -> Complex {
        state->zp = state->zp * z;  // z^n
        if (int_s) return state->zp * pow_si(Complex(Real(n, bits)), -m);
        Real ln = log(Real(n, bits));
        return state->zp * exp(-(s * Complex(ln)));
    };
    auto tail = [&, gd](long n) -> Real {
        // ratio bound r = |z| e^{g/(n+1)}; valid once r < 1
        Real r = az * exp(g / Real(n + 1, bits));
        if (!(r < one)) return huge;
        Real tnext = pow_si(az, n + 1);
        if (gd > 0) tnext = tnext * pow(Real(n + 1, bits), g);
        return tnext / (one - r);
    };
    return sum_series(term, tail, 1, ctx).value;
}

std::pair<Complex, Complex> clausen_pair(const Complex& s, const Real& theta_angle,
                                         const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    Complex zp = cis(theta_angle);
    Complex zm = cis(-theta_angle);
    Complex lp = polylog(s, zp, ctx);
    Complex lm = same_value(zp, zm) ? lp : polylog(s, zm, ctx);
    Complex ci = (lp + lm) / Real(2L, bits);
    Complex diff = lp - lm;  // = 2i Si
    Complex si(diff.im / Real(2L, bits), -(diff.re / Real(2L, bits)));
    return {ci, si};
}

// ---- polygamma / bernoulli / apostol ---------------------------------------

Complex polygamma(int n, const Complex& z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("polygamma: order must be >= 1");
    const mpfr_prec_t bits = ctx.bits();
    Complex zeta_val = hurwitz_zeta(Complex(Real(n + 1L, bits)), z, ctx);
    Real f = factorial(static_cast<unsigned long>(n), bits);
    if (n % 2 == 0) f = -f;  // (-1)^{n+1} n!
    return Complex(f) * zeta_val;
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real half("0.5", bits);

    Real dist(z.prec());
    long nz = nearest_int(z, dist);
    if (nz <= 0 && dist <= ctx.work_tol(2))
        throw PoleError("digamma: pole at z=" + std::to_string(nz), nz);

    if (z.re < half) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Complex pz = Complex(Real::pi(bits)) * z;
        Complex cot = cos(pz) / sin(pz);
        return digamma(Complex(one) - z, ctx) - Complex(Real::pi(bits)) * cot;
    }

    double target = 0.7 * ctx.digits();
    double t2 = 0.55 * ctx.work_digits() + 5.0;
    if (t2 > target) target = t2;
    long m = 0;
    double res = z.re.to_double();
    if (res < target) m = static_cast<long>(std::ceil(target - res));

    Complex w = z + Complex(Real(m, bits));
    Complex acc = log(w);
    Complex winv = Real(1L, bits) / w;
    acc -= winv / Real(2L, bits);
    Complex winv2 = winv * winv;
    Complex cur = winv2;
    const Real stop = ctx.work_tol(-2);
    for (long k = 1; k <= 600; ++k) {
        Real b = BernoulliTable::number(static_cast<int>(2 * k), bits);
        Complex term = Complex(b / Real(2 * k, bits)) * cur;
        acc -= term;
        if (abs(term) <= stop) break;
        cur = cur * winv2;
    }
    for (long j = 0; j < m; ++j) acc -= Real(1L, bits) / (z + Complex(Real(j, bits)));
    ensure_finite(acc, "digamma");
    return acc;
}

Complex bernoulli_poly(int n, const Complex& z, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("bernoulli_poly: order must be >= 0");
    const mpfr_prec_t bits = ctx.bits();
    // z^j powers once
    std::vector<Complex> zp(static_cast<size_t>(n) + 1, Complex(Real(1L, bits)));
    for (int j = 1; j <= n; ++j) zp[static_cast<size_t>(j)] = zp[static_cast<size_t>(j - 1)] * z;
    CompensatedSum acc(bits);
    for (int k = 0; k <= n; ++k) {
        if (k > 1 && k % 2 == 1) continue;  // odd Bernoulli vanish
        Real c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k), bits) *
                 BernoulliTable::number(k, bits);
        acc.add(Complex(c) * zp[static_cast<size_t>(n - k)]);
    }
    return acc.value();
}

Complex apostol_bernoulli(int n, const Complex& x, const Complex& lambda,
                          const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("apostol_bernoulli: order must be >= 0");
    const mpfr_prec_t bits0 = ctx.bits();
    const Real one0(1L, bits0);
    Real gap = abs(lambda - Complex(one0));
    if (gap <= ctx.work_tol(2)) return bernoulli_poly(n, x, ctx);

    int lost = digits_lost(gap);
    const PrecisionContext wctx =
        lost > 0 ? ctx.with_extra_guard((lost + 2) * (n > 4 ? n : 4)) : ctx;
    const mpfr_prec_t bits = wctx.bits();
    const Real one(1L, bits);
    Complex lam = to_prec(lambda, bits);
    Complex xx = to_prec(x, bits);

    // numerator t e^{xt}: n_j = x^{j-1}/(j-1)!  (n_0 = 0)
    // denominator lambda e^t - 1: d_0 = lambda - 1, d_j = lambda / j!
    std::vector<Complex> num(static_cast<size_t>(n) + 1, Complex(Real(0L, bits)));
    std::vector<Complex> den(static_cast<size_t>(n) + 1, Complex(Real(0L, bits)));
    den[0] = lam - Complex(one);
    Real fact(1L, bits);   // j!
    Complex numc(one);     // x^{j-1}/(j-1)! at index j
    for (int j = 1; j <= n; ++j) {
        num[static_cast<size_t>(j)] = numc;
        fact = fact * Real(j, bits);
        den[static_cast<size_t>(j)] = lam / fact;
        numc = numc * xx / Real(j, bits);
    }
    // quotient coefficients q_j of N/D
    std::vector<Complex> q(static_cast<size_t>(n) + 1, Complex(Real(0L, bits)));
    for (int j = 0; j <= n; ++j) {
        Complex acc = num[static_cast<size_t>(j)];
        for (int i = 1; i <= j; ++i)
            acc -= den[static_cast<size_t>(i)] * q[static_cast<size_t>(j - i)];
        q[static_cast<size_t>(j)] = acc / den[0];
    }
    return q[static_cast<size_t>(n)] * Complex(factorial(static_cast<unsigned long>(n), bits));
}

// ---- Lerch residual ---------------------------------------------------------

namespace {

// Limit of the functional-equation RHS at integer s = m >= 2, where
// Gamma(1-s) poles against a zero of the bracket:
//   RHS -> (2 pi)^{m-1} * (-(-1)^{m-1}/(m-1)!) * B'(m)
// with B(s) the phase-weighted zeta bracket.
Complex lerch_rhs_integer(const ThetaParam& theta, long m, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real t = theta.value();
    const Complex w(Real(1 - m, bits));  // 1 - s at s = m

    Complex halfpi(Real(0L, bits), Real::pi(bits) / 2L);
    Complex ph_plus = exp(halfpi * w);
    Complex ph_minus = exp(-(halfpi * w));
    Complex za = hurwitz_zeta(w, Complex(t), ctx);
    Complex zb = hurwitz_zeta(w, Complex(one - t), ctx);
    Complex dza = hurwitz_zeta_ds(w, Complex(t), ctx);
    Complex dzb = hurwitz_zeta_ds(w, Complex(one - t), ctx);

    // d/ds of bracket: phases differentiate to -(i pi/2) ph_plus, +(i pi/2) ph_minus;
    // zeta arguments are 1-s so chain rule contributes -1.
    Complex dbracket = ph_plus * (-(halfpi)*za - dza) + ph_minus * (halfpi * zb - dzb);

    Real fac = factorial(static_cast<unsigned long>(m - 1), bits);
    Real sign = (m % 2 == 0) ? Real(1L, bits) : Real(-1L, bits);  // -(-1)^{m-1}
    Complex pref = Complex(sign / fac) * exp(Complex(Real(m - 1, bits)) * Complex(log(two_pi(bits))));
    return pref * dbracket;
}

}  // namespace

Complex lerch_residual(const ThetaParam& theta, const Complex& s, const PrecisionContext& ctx) {
    const Real one(1L, ctx.bits());
    if (!(s.re > one)) throw DomainError("lerch_residual: requires Re s > 1");
    Complex lhs = periodic_zeta_series(theta, s, ctx);
    Real dist(s.prec());
    long m = nearest_int(s, dist);
    Complex rhs = (m >= 2 && dist <= ctx.work_tol(2))
                      ? lerch_rhs_integer(theta, m, ctx)
                      : periodic_zeta_lerch(theta, s, ctx);
    return lhs - rhs;
}

}  // namespace qdilog
