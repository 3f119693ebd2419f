#include "qdilog/mellin.hpp"

#include <cmath>

namespace qdilog {

namespace {

Real two_pi(mpfr_prec_t bits) { return Real::pi(bits) * 2L; }

long nearest_int_re(const Complex& s, Real& dist) {
    Real r = round_nearest(s.re);
    long n = r.to_long();
    dist = abs(s - Complex(Real(n, s.prec())));
    return n;
}

}  // namespace

void ContourSpec::validate(const PrecisionContext&) const {
    if (!(height > Real(0L, height.prec())) || !(step > Real(0L, step.prec())))
        throw DomainError("contour: height and step must be positive");
    Real nodes = height / step * 2L;
    if (nodes > Real(10000000L, nodes.prec())) throw DomainError("contour: more than 1e7 nodes");
}

Complex integrand_g(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                    const PrecisionContext& ctx) {
    Real dist(s.prec());
    long n = nearest_int_re(s, dist);
    if (n <= 1 && dist <= ctx.tol(2))
        throw PoleError("integrand_g: s within tolerance of pole " + std::to_string(n), n);
    const Real one(1L, ctx.bits());
    Complex zeta_factor = hurwitz_zeta(s, zparam, ctx);
    Complex f_factor = periodic_zeta(theta, s + Complex(one), ctx);
    Complex gamma_factor = gamma(s, ctx);
    return zeta_factor * f_factor * gamma_factor;
}

namespace {

// shared scaffolding of the ci/si integrands
Complex clausen_integrand(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                          const PrecisionContext& ctx, bool cosine_part) {
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    Real t = to_prec(theta.value(), bits);

    Complex zz = hurwitz_zeta(s, zparam, ctx);
    Complex za = hurwitz_zeta(-s, Complex(t), ctx);
    Complex zb = hurwitz_zeta(-s, Complex(one - t), ctx);
    Complex bracket = cosine_part ? za + zb : za - zb;

    Complex pref = exp((s + Complex(one)) * Complex(log(two_pi(bits))));
    Complex halfpis = Complex(Real::pi(bits) / 2L) * s;
    Complex trig = cosine_part ? sin(halfpis) : cos(halfpis);
    Complex denom = Real(4L, bits) * s * trig;  // 2s * trig, plus the 1/2 average
    Complex v = pref * zz * bracket / denom;
    return cosine_part ? -v : v;
}

struct AutoQuad {
    QuadResult result;
};

// pole_gap: distance from the line to the nearest integrand pole; the
// starting step keeps the line at least one step away from it.
QuadResult auto_refine(const std::function<Complex(const Complex&)>& f, const Real& c,
                       const Real& x, const PrecisionContext& ctx, const Real& pole_gap) {
    const mpfr_prec_t bits = ctx.bits();
    double digits = ctx.digits();
    Real T = ctx.make(0.9 * digits + 12.0);
    Real h = min(ctx.make(0.25), pole_gap / 2L);

    ContourSpec spec{c, T, h};
    QuadResult prev = vertical_line_integral(f, spec, x, ctx);
    long total_nodes = prev.nodes;
    const Real unit = Real::pow10(-ctx.digits() - 1, bits);
    const Real hard_floor = Real::pow10(-ctx.digits() - 12, bits);
    for (int iter = 0; iter < 7; ++iter) {
        spec.step = spec.step / 2L;
        spec.height = spec.height + Real(6L, bits);
        QuadResult cur = vertical_line_integral(f, spec, x, ctx);
        total_nodes += cur.nodes;
        Real diff = abs(cur.value - prev.value);
        // attainable accuracy scales with the sample peak (cancellation
        // noise), not just |I|: exponentially small results cannot be
        // resolved relative to themselves
        Real scale = max(abs(cur.value), cur.peak / Real(100L, bits));
        Real target = max(unit * scale, hard_floor);
        if (diff <= target) {
            cur.truncation_estimate = max(diff, cur.truncation_estimate);
            cur.nodes = total_nodes;
            return cur;
        }
        prev = cur;
    }
    throw NonConvergenceError("barnes quadrature: refinement cap reached without agreement",
                              total_nodes, "");
}

}  // namespace

Complex integrand_ci(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                     const PrecisionContext& ctx) {
    return clausen_integrand(s, zparam, theta, ctx, true);
}

Complex integrand_si(const Complex& s, const Complex& zparam, const ThetaParam& theta,
                     const PrecisionContext& ctx) {
    return clausen_integrand(s, zparam, theta, ctx, false);
}

QuadResult vertical_line_integral(const std::function<Complex(const Complex&)>& f,
                                  const ContourSpec& spec, const Real& x,
                                  const PrecisionContext& ctx) {
    spec.validate(ctx);
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    if (!(x > Real(0L, bits))) throw DomainError("vertical_line_integral: x must be positive");

    const Real c = to_prec(spec.c, bits);
    const Real h = to_prec(spec.step, bits);
    const Real T = to_prec(spec.height, bits);
    const long K = static_cast<long>(floor(T / h).to_double());

    const Real lx = log(to_prec(x, bits));
    const Real xc = exp(-(c * lx));              // x^{-c}
    const Complex rot_up = cis(-(h * lx));       // increment of x^{-i k h}
    const Complex rot_dn = rot_up.conj();

    const Real cut = Real::pow10(-ctx.digits() - 5, bits);
    CompensatedSum acc(bits);

    // midline node
    Complex s0(c, Real(0L, bits));
    Complex f0 = f(s0);
    acc.add(f0 * Complex(xc));
    Real peak = abs(f0) * xc;
    Real inner_peak = peak;

    Complex ph_up(one);  // phase of x^{-s} relative to x^{-c} at +ikh
    Complex ph_dn(one);
    long small_run = 0;
    long grow_run = 0;
    long nodes = 1;
    Real last_mag(0L, bits);
    Real tail_mag(0L, bits);
    bool cut_hit = false;
    for (long k = 1; k <= K; ++k) {
        ph_up = ph_up * rot_up;
        ph_dn = ph_dn * rot_dn;
        Real kh = h * Real(k, bits);
        Complex su(c, kh);
        Complex sd(c, -kh);
        Complex vu = f(su) * (ph_up * Complex(xc));
        Complex vd = f(sd) * (ph_dn * Complex(xc));
        acc.add(vu);
        acc.add(vd);
        nodes += 2;
        Real mag = max(abs(vu), abs(vd));
        if (mag > peak) peak = mag;
        if (kh <= T / 2L && mag > inner_peak) inner_peak = mag;

        // divergence heuristic: outer-half samples far above the inner peak
        if (kh > T / 2L) {
            if (mag > (inner_peak + one) * 100L)
                ++grow_run;
            else
                grow_run = 0;
            if (grow_run >= 3)
                throw DivergenceError("vertical_line_integral: integrand grows along the line");
        }
        last_mag = mag;

        if (mag < cut) {
            if (++small_run >= 10) {
                tail_mag = mag;
                cut_hit = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if (!cut_hit) tail_mag = last_mag;

    Real weight = h / two_pi(bits);
    QuadResult r;
    r.value = acc.value() * Complex(weight);
    r.truncation_estimate = tail_mag * weight * Real(20L, bits);
    r.nodes = nodes;
    r.peak = peak;
    ensure_finite(r.value, "vertical_line_integral");
    return r;
}

QuadResult barnes_li2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx) {
    const Real one(1L, ctx.bits());
    if (!(c > one)) throw DomainError("barnes_li2: requires c > 1");
    Complex z = p.zparam();
    ThetaParam theta = p.theta();
    auto f = [&, z](const Complex& s) { return integrand_g(s, z, theta, ctx); };
    return auto_refine(f, c, p.x(), ctx, c - one);  // nearest pole: s = 1
}

QuadResult barnes_ci2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx) {
    const Real one(1L, ctx.bits());
    if (!(c > one) || !(c < Real(2L, ctx.bits())))
        throw DomainError("barnes_ci2: requires 1 < c < 2");
    Complex z = p.zparam();
    ThetaParam theta = p.theta();
    auto f = [&, z](const Complex& s) { return integrand_ci(s, z, theta, ctx); };
    return auto_refine(f, c, p.x(), ctx, min(c - one, Real(2L, ctx.bits()) - c));
}

QuadResult barnes_si2(const ExponentialParam& p, const Real& c, const PrecisionContext& ctx) {
    const Real one(1L, ctx.bits());
    if (!(c > one) || !(c < Real(2L, ctx.bits())))
        throw DomainError("barnes_si2: requires 1 < c < 2");
    Complex z = p.zparam();
    ThetaParam theta = p.theta();
    auto f = [&, z](const Complex& s) { return integrand_si(s, z, theta, ctx); };
    return auto_refine(f, c, p.x(), ctx, min(c - one, Real(2L, ctx.bits()) - c));
}

namespace {

Complex residue_quad(const std::function<Complex(const Complex&)>& f, const Complex& pole,
                     const Real& r, long n, mpfr_prec_t bits) {
    // (1/2 pi i) contour integral = (r/n) sum f(pole + r e^{i phi_j}) e^{i phi_j}
    CompensatedSum acc(bits);
    Real step = two_pi(bits) / Real(n, bits);
    Complex rot = cis(step);
    Complex ph(Real(1L, bits), Real(0L, bits));
    for (long j = 0; j < n; ++j) {
        Complex s = pole + Complex(r) * ph;
        acc.add(f(s) * ph);
        ph = ph * rot;
    }
    return acc.value() * Complex(r / Real(n, bits));
}

}  // namespace

long residue_default_nodes(const PrecisionContext& ctx) {
    long n = 4L * ctx.digits();
    return n > 64 ? n : 64;
}

ResidueTerm residue_at(const std::function<Complex(const Complex&)>& f, const Complex& pole,
                       const Real& radius, long nodes, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    if (!(radius > Real(0L, bits)) || !(radius < Real("0.5", bits)))
        throw DomainError("residue_at: radius must lie in (0, 1/2)");
    if (nodes < 8) throw DomainError("residue_at: too few nodes");

    Complex v1 = residue_quad(f, pole, radius, nodes, bits);
    Complex v2 = residue_quad(f, pole, radius, 2 * nodes, bits);
    Real scale = max(Real(1L, bits), abs(v2));
    Real tol_conv = ctx.tol(10) * scale;
    if (abs(v1 - v2) > tol_conv)
        throw ResidueInstabilityError("residue_at: quadrature not converged under node doubling");

    Complex v3 = residue_quad(f, pole, radius / 2L, 2 * nodes, bits);
    Real tol_rad = ctx.tol(12) * scale;
    if (abs(v2 - v3) > tol_rad)
        throw ResidueInstabilityError(
            "residue_at: value unstable under radius halving (higher-order pole or nearby "
            "singularity)");

    return ResidueTerm{pole, v2, radius};
}

}  // namespace qdilog
