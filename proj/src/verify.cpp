#include "qdilog/verify.hpp"

#include <sstream>

namespace qdilog {

namespace {

Real two_pi(mpfr_prec_t bits) { return Real::pi(bits) * 2L; }

std::string fmt(const Real& v, const PrecisionContext& ctx) { return v.to_string(ctx.digits()); }

std::string fmt_c(const Complex& v, const PrecisionContext& ctx) {
    return v.re.to_string(ctx.digits()) + (v.im.sign() < 0 ? "" : "+") +
           v.im.to_string(ctx.digits()) + "i";
}

CaseResult make_case(const std::string& id, const std::string& inputs, const Real& residual,
                     const Real& tol, const PrecisionContext& ctx, const std::string& note = "") {
    CaseResult c;
    c.id = id;
    c.inputs = inputs;
    c.residual = fmt(residual, ctx);
    c.tolerance = fmt(tol, ctx);
    c.pass = residual <= tol;
    c.note = note;
    return c;
}

}  // namespace

std::vector<KirillovCase> default_kirillov_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    std::vector<KirillovCase> grid;
    for (const char* qs : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        Real q(qs, bits);
        grid.push_back({q, Complex(Real("0.1", bits))});
        grid.push_back({q, Complex(Real("0.5", bits))});
        grid.push_back({q, Complex(Real("0.8", bits))});
        grid.push_back({q, Complex(Real("0.3", bits), Real("0.4", bits))});
        grid.push_back({q, Complex(Real("-0.6", bits))});
    }
    return grid;
}

std::vector<LerchCase> default_lerch_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    std::vector<LerchCase> grid;
    for (const char* ts : {"0.3", "0.5", "0.7"})
        for (const char* ss : {"2.5", "3", "3.75"})
            grid.push_back({Real(ts, bits), Complex(Real(ss, bits))});
    return grid;
}

std::vector<BarnesCase> default_barnes_q1_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    return {
        {Real(1L, bits), Complex(Real(2L, bits)), Real("0.3", bits), Real("1.5", bits)},
        {Real(2L, bits), Complex(Real(3L, bits)), Real("0.5", bits), Real("1.5", bits)},
        {Real("0.7", bits), Complex(Real("1.5", bits)), Real("0.25", bits), Real("1.5", bits)},
    };
}

std::vector<BarnesCase> default_barnes_q0_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    return {
        {Real(8L, bits), Complex(Real(2L, bits)), Real("0.3", bits), Real("1.5", bits)},
        {Real(12L, bits), Complex(Real("2.5", bits)), Real("0.7", bits), Real("1.5", bits)},
    };
}

std::vector<LimitsCase> default_limits_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    LimitsCase c;
    c.z = Complex(Real("0.5", bits));
    c.qs = {Real("0.9", bits), Real("0.99", bits), Real("0.999", bits)};
    return {c};
}

std::vector<CoefficientCase> default_coefficient_grid(const PrecisionContext& ctx) {
    const auto bits = ctx.bits();
    return {{Complex(Real(2L, bits)), Real("0.3", bits)}};
}

VerificationReport verify_kirillov(const std::vector<KirillovCase>& grid,
                                   const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "kirillov";
    rep.digits = ctx.digits();
    const Real tol = Real::pow10(-(ctx.digits() - 10), ctx.bits());
    for (const auto& kc : grid) {
        QParam q(kc.q, ctx);
        Complex lhs = euler_series(kc.z, q, ctx);
        Complex rhs = exp(q_polylog(2, kc.z, q, ctx));
        Real resid = abs(lhs - rhs) / abs(rhs);
        std::ostringstream in;
        in << "q=" << fmt(kc.q, ctx) << " z=" << fmt_c(kc.z, ctx);
        rep.cases.push_back(make_case("kirillov", in.str(), resid, tol, ctx));
    }
    return rep;
}

VerificationReport verify_lerch(const std::vector<LerchCase>& grid, const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "lerch";
    rep.digits = ctx.digits();
    const Real tol = Real::pow10(-(ctx.digits() - 10), ctx.bits());
    for (const auto& lc : grid) {
        ThetaParam th(lc.theta, ctx);
        Real resid = abs(lerch_residual(th, lc.s, ctx));
        std::ostringstream in;
        in << "theta=" << fmt(lc.theta, ctx) << " s=" << fmt_c(lc.s, ctx);
        rep.cases.push_back(make_case("lerch", in.str(), resid, tol, ctx));
    }
    return rep;
}

Complex zeta_em_independent(int m, const Complex& z, const PrecisionContext& ctx) {
    // plain fixed-shift Euler-Maclaurin, recomputing everything per term
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const long M = 2L * ctx.work_digits() + 8;
    Complex acc(Real(0L, bits), Real(0L, bits));
    for (long k = 0; k < M; ++k) acc += pow_si(z + Complex(Real(k, bits)), -m);
    Complex zM = z + Complex(Real(M, bits));
    acc += pow_si(zM, 1 - m) / Real(m - 1, bits);
    acc += pow_si(zM, -m) / Real(2L, bits);
    Real stop = ctx.work_tol(0);
    for (long j = 1; j <= 200; ++j) {
        // B_{2j}/(2j)! * (m)_{2j-1} * (z+M)^{-m-2j+1}, all recomputed
        Real fact(1L, bits);
        for (long i = 2; i <= 2 * j; ++i) fact *= Real(i, bits);
        Complex poch(one);
        for (long i = 0; i <= 2 * j - 2; ++i) poch *= Complex(Real(m + i, bits));
        Complex term = Complex(BernoulliTable::number(static_cast<int>(2 * j), bits) / fact) *
                       poch * pow_si(zM, -m - 2 * j + 1);
        acc += term;
        if (abs(term) <= stop) break;
    }
    return acc;
}

VerificationReport verify_special_values(const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "special_values";
    rep.digits = ctx.digits();
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);

    // A: zeta(-n, z) = -B_{n+1}(z)/(n+1)
    {
        std::vector<Complex> zs = {Complex(Real("0.3", bits)), Complex(one),
                                   Complex(Real("2.5", bits)), Complex(one, one)};
        const Real tol = ctx.tol(8);
        for (int n = 0; n <= 10; ++n) {
            for (const auto& z : zs) {
                Complex lhs = hurwitz_zeta(Complex(Real(-n, bits)), z, ctx);
                Complex rhs = -(bernoulli_poly(n + 1, z, ctx) / Real(n + 1, bits));
                Real resid = abs(lhs - rhs) / max(one, abs(rhs));
                std::ostringstream in;
                in << "n=" << n << " z=" << fmt_c(z, ctx);
                rep.cases.push_back(make_case("hurwitz_bernoulli", in.str(), resid, tol, ctx));
            }
        }
    }

    // B: Apostol special values, adjudicated: the corrected relation carries
    // the lambda factor the printed form lacks
    {
        const Real tol = ctx.tol(8);
        for (const char* ts : {"0.2", "0.5", "0.8"}) {
            Real tv(ts, bits);
            ThetaParam th(tv, ctx);
            Complex lam = cis(two_pi(bits) * tv);
            for (int n = 0; n <= 8; ++n) {
                Complex lhs = periodic_zeta(th, Complex(Real(-n, bits)), ctx);
                Complex ab = apostol_bernoulli(n + 1, Complex(one), lam, ctx);
                Complex corrected = -(lam * ab) / Real(n + 1, bits);
                Complex printed = -(ab) / Real(n + 1, bits);
                Real resid = abs(lhs - corrected) / max(one, abs(corrected));
                bool printed_matches = abs(lhs - printed) <= tol * max(one, abs(printed));
                std::ostringstream in;
                in << "n=" << n << " theta=" << ts;
                std::string note = printed_matches
                                       ? "printed form coincides (degenerate value)"
                                       : "printed form (no lambda factor) refuted";
                rep.cases.push_back(
                    make_case("apostol_special_value", in.str(), resid, tol, ctx, note));
            }
        }
    }

    // C: polygamma against the independent Euler-Maclaurin
    {
        const Real tol = ctx.tol(10);
        std::vector<Complex> zs = {Complex(one), Complex(Real("2.5", bits)), Complex(one, one)};
        for (int n = 1; n <= 6; ++n) {
            for (const auto& z : zs) {
                Complex lhs = polygamma(n, z, ctx);
                Real f = factorial(static_cast<unsigned long>(n), bits);
                if (n % 2 == 0) f = -f;
                Complex rhs = Complex(f) * zeta_em_independent(n + 1, z, ctx);
                Real resid = abs(lhs - rhs) / max(one, abs(rhs));
                std::ostringstream in;
                in << "n=" << n << " z=" << fmt_c(z, ctx);
                rep.cases.push_back(make_case("polygamma_zeta", in.str(), resid, tol, ctx));
            }
        }
    }

    // D: Bernoulli reflection
    {
        const Real tol = ctx.tol(8);
        for (int n = 0; n <= 12; ++n) {
            for (const char* ts : {"0.1", "0.25", "0.5", "0.6", "0.9"}) {
                Real tv(ts, bits);
                Complex a = bernoulli_poly(n, Complex(one - tv), ctx);
                Complex b = bernoulli_poly(n, Complex(tv), ctx);
                if (n % 2 == 1) b = -b;
                Real resid = abs(a - b) / max(one, abs(a));
                std::ostringstream in;
                in << "n=" << n << " theta=" << ts;
                rep.cases.push_back(make_case("bernoulli_reflection", in.str(), resid, tol, ctx));
            }
        }
    }

    // E: parity sums, corrected orientation (the printed pair is swapped)
    {
        const Real tol = ctx.tol(8);
        for (const char* ts : {"0.2", "0.35", "0.8"}) {
            Real tv(ts, bits);
            for (int n = 0; n <= 9; ++n) {
                Complex zp = hurwitz_zeta(Complex(Real(-n, bits)), Complex(tv), ctx);
                Complex zm = hurwitz_zeta(Complex(Real(-n, bits)), Complex(one - tv), ctx);
                Complex bn = bernoulli_poly(n + 1, Complex(tv), ctx) / Real(n + 1, bits);
                long sgn_sum = (n % 2 == 0) ? 0 : -2;   // (-1)^n - 1
                long sgn_dif = (n % 2 == 0) ? -2 : 0;   // (-1)^{n+1} - 1
                Real rs = abs(zp + zm - bn * Real(sgn_sum, bits)) / max(one, abs(bn));
                Real rd = abs(zp - zm - bn * Real(sgn_dif, bits)) / max(one, abs(bn));
                std::ostringstream in;
                in << "n=" << n << " theta=" << ts;
                rep.cases.push_back(make_case("parity_sum", in.str(), rs, tol, ctx,
                                              "corrected orientation; printed RHS pair is swapped"));
                rep.cases.push_back(make_case("parity_difference", in.str(), rd, tol, ctx));
            }
        }
    }

    rep.confirmed_variant =
        "apostol: F(theta,-n) = -lambda B_{n+1}(1,lambda)/(n+1); parity identities with the "
        "corrected right-hand sides";
    return rep;
}

VerificationReport verify_barnes_q1(const std::vector<BarnesCase>& grid,
                                    const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "barnes_q1";
    rep.digits = ctx.digits();
    const mpfr_prec_t bits = ctx.bits();
    const Real tol = Real::pow10(-(ctx.digits() - 15), bits);

    // Cahen-Mellin calibration fixture
    {
        auto f = [&](const Complex& s) { return gamma(s, ctx); };
        ContourSpec spec{Real("1.5", bits), Real(2L * ctx.digits(), bits), Real("0.0625", bits)};
        auto r = vertical_line_integral(f, spec, Real(1L, bits), ctx);
        Real resid = abs(r.value - Complex(exp(Real(-1L, bits))));
        rep.cases.push_back(make_case("cahen_mellin", "x=1 c=1.5", resid,
                                      Real::pow10(-(ctx.digits() - 10), bits), ctx));
    }

    for (const auto& bc : grid) {
        ThetaParam th(bc.theta, ctx);
        ExponentialParam p(bc.x, bc.zparam, th, ctx);
        auto r = barnes_li2(p, bc.c, ctx);
        Complex ref = q_polylog(2, p.omega(ctx), p.q(ctx), ctx);
        Real resid = abs(r.value - ref);
        std::ostringstream in;
        in << "x=" << fmt(bc.x, ctx) << " zparam=" << fmt_c(bc.zparam, ctx)
           << " theta=" << fmt(bc.theta, ctx) << " c=" << fmt(bc.c, ctx);
        rep.cases.push_back(make_case("barnes_li2", in.str(), resid, tol, ctx));
    }
    return rep;
}

VerificationReport verify_barnes_q0(const std::vector<BarnesCase>& grid,
                                    const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "barnes_q0";
    rep.digits = ctx.digits();
    const mpfr_prec_t bits = ctx.bits();
    const Real tol = Real::pow10(-(ctx.digits() - 15), bits);

    for (const auto& bc : grid) {
        ThetaParam th(bc.theta, ctx);
        ExponentialParam p(bc.x, bc.zparam, th, ctx);
        auto [ci, si] = q_clausen_pair(p, ctx);
        auto rc = barnes_ci2(p, bc.c, ctx);
        auto rs = barnes_si2(p, bc.c, ctx);
        std::ostringstream in;
        in << "x=" << fmt(bc.x, ctx) << " zparam=" << fmt_c(bc.zparam, ctx)
           << " theta=" << fmt(bc.theta, ctx) << " c=" << fmt(bc.c, ctx);
        rep.cases.push_back(make_case("barnes_ci2", in.str(), abs(rc.value - ci), tol, ctx));
        rep.cases.push_back(make_case("barnes_si2", in.str(), abs(rs.value - si), tol, ctx));
    }

    // theta = 1/2: the zeta-difference bracket vanishes identically
    {
        ThetaParam half(Real("0.5", bits), ctx);
        ExponentialParam p(Real(8L, bits), Complex(Real(2L, bits)), half, ctx);
        auto rs = barnes_si2(p, Real("1.5", bits), ctx);
        rep.cases.push_back(make_case("barnes_si2_theta_half", "x=8 zparam=2 theta=0.5 c=1.5",
                                      abs(rs.value), tol, ctx,
                                      "integrand vanishes identically at theta=1/2"));
    }
    return rep;
}

VerificationReport verify_coefficients(const std::vector<CoefficientCase>& grid,
                                       const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "coefficients";
    rep.digits = ctx.digits();
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real tol_lead = Real::pow10(-(ctx.digits() - 15), bits);  // s = 1, 0
    const Real tol_adj = Real::pow10(-(ctx.digits() - 20), bits);   // adjudications
    const Real radius("0.25", bits);
    const long nodes = residue_default_nodes(ctx);

    for (const auto& cc : grid) {
        ThetaParam th(cc.theta, ctx);
        const Complex z = cc.zparam;
        auto g = [&](const Complex& s) { return integrand_g(s, z, th, ctx); };
        auto fci = [&](const Complex& s) { return integrand_ci(s, z, th, ctx); };
        auto fsi = [&](const Complex& s) { return integrand_si(s, z, th, ctx); };
        std::ostringstream base;
        base << "zparam=" << fmt_c(z, ctx) << " theta=" << fmt(cc.theta, ctx);

        // s = 1: residue equals F(theta, 2)
        {
            auto r = residue_at(g, Complex(one), radius, nodes, ctx);
            Complex expect = periodic_zeta(th, Complex(Real(2L, bits)), ctx);
            rep.cases.push_back(make_case("residue_s1", base.str() + " s=1",
                                          abs(r.value - expect), tol_lead, ctx));
        }
        // s = 0: residue equals (1/2 - z) F(theta, 1)
        {
            auto r = residue_at(g, Complex(Real(0L, bits)), radius, nodes, ctx);
            Complex expect =
                (Complex(Real("0.5", bits)) - z) * periodic_zeta(th, Complex(one), ctx);
            rep.cases.push_back(make_case("residue_s0", base.str() + " s=0",
                                          abs(r.value - expect), tol_lead, ctx));
        }
        // s = -1, -2, -3: printed vs index-corrected assembly
        for (int n = 1; n <= 3; ++n) {
            auto r = residue_at(g, Complex(Real(-n, bits)), radius, nodes, ctx);
            Complex corrected = q1_coeff_corrected(n, z, th, ctx);
            Complex printed = q1_coeff_printed(n, z, th, ctx);
            bool cm = abs(r.value - corrected) <= tol_adj;
            bool pm = abs(r.value - printed) <= tol_adj;
            CaseResult c;
            c.id = "adjudicate_q1_s" + std::to_string(-n);
            c.inputs = base.str();
            c.residual = fmt(abs(r.value - corrected), ctx);
            c.tolerance = fmt(tol_adj, ctx);
            c.pass = cm && !pm;
            c.note = pm ? "printed form also matches (unexpected)"
                        : "index-corrected assembly confirmed; printed (B_{n+1} index and "
                          "sign) refuted";
            rep.cases.push_back(c);
        }
        // s = 2, 4 (ci side) and 3, 5 (si side)
        for (long pole : {2L, 3L, 4L, 5L}) {
            const bool ci_side = (pole % 2 == 0);
            std::function<Complex(const Complex&)> f =
                ci_side ? std::function<Complex(const Complex&)>(fci)
                        : std::function<Complex(const Complex&)>(fsi);
            auto r = residue_at(f, Complex(Real(pole, bits)), radius, nodes, ctx);
            int k = static_cast<int>(pole / 2);
            Complex printed = ci_side ? q0_ci_coeff_printed(k, z, th, ctx)
                                      : q0_si_coeff_printed(k, z, th, ctx);
            bool zm = abs(r.value) <= tol_adj;            // corrected candidate: exactly 0
            bool pm = abs(r.value - printed) <= tol_adj;  // printed candidate
            CaseResult c;
            c.id = std::string("adjudicate_q0_") + (ci_side ? "ci" : "si") + "_s" +
                   std::to_string(pole);
            c.inputs = base.str();
            c.residual = fmt(abs(r.value), ctx);
            c.tolerance = fmt(tol_adj, ctx);
            c.pass = zm && !pm;
            c.note = "residue vanishes (parity of the zeta bracket); printed coefficient refuted";
            rep.cases.push_back(c);
        }
        // the printed Si 1/x constant: the s=1 pole sits left of the contour
        {
            auto r = residue_at(fsi, Complex(one), radius, nodes, ctx);
            Complex cand_gamma = q0_si_leading_printed(th, ctx);
            Complex cand_psi = q0_si_leading_psi_variant(z, th, ctx);
            bool gm = abs(r.value - cand_gamma) <= tol_adj;
            bool pm = abs(r.value - cand_psi) <= tol_adj;
            CaseResult c;
            c.id = "adjudicate_si_leading";
            c.inputs = base.str() + " s=1";
            c.residual = fmt(abs(r.value), ctx);
            c.tolerance = fmt(tol_adj, ctx);
            c.pass = !gm && !pm;
            c.note = "s=1 lies left of the 1<c<2 contour (not crossed by the rightward shift); "
                     "residue = " +
                     fmt_c(r.value, ctx) +
                     "; both printed candidates ((4gamma/pi)B2, -(4psi(z)/pi)B2) refuted";
            rep.cases.push_back(c);
        }
    }

    rep.confirmed_variant =
        "q1 powers x^n: index-corrected assembly ((-1)^n/n!) zeta(-n,z) F(theta,1-n); q0: all "
        "crossed residues vanish (expansion identically zero); si 1/x term absent";
    return rep;
}

VerificationReport verify_limits(const std::vector<LimitsCase>& grid,
                                 const PrecisionContext& ctx) {
    VerificationReport rep;
    rep.suite = "limits";
    rep.digits = ctx.digits();
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);

    for (const auto& lc : grid) {
        std::vector<QParam> qs;
        qs.reserve(lc.qs.size());
        for (const auto& q : lc.qs) qs.emplace_back(q, ctx);
        auto seq = limit_probe_q1(lc.z, qs, ctx);
        Complex target = polylog(Complex(Real(2L, bits)), lc.z, ctx);
        bool decreasing = true;
        Real prev(0L, bits);
        std::ostringstream devs;
        for (size_t i = 0; i < seq.size(); ++i) {
            Real d = abs(seq[i] - target);
            if (i > 0 && !(d < prev)) decreasing = false;
            devs << (i ? " " : "") << fmt(d, ctx);
            prev = d;
        }
        CaseResult c;
        c.id = "limit_q_to_1";
        c.inputs = "z=" + fmt_c(lc.z, ctx);
        c.residual = devs.str();
        c.tolerance = "strictly decreasing";
        c.pass = decreasing && seq.size() >= 2;
        rep.cases.push_back(c);
    }

    // q -> 0 probe: (1-q) Li2(z,q) + log(1-z) small at q = 1e-6
    {
        Complex z(Real("0.5", bits));
        QParam tiny(Real("1e-6", bits), ctx);
        Complex val = Complex(one - Real("1e-6", bits)) * q_polylog(2, z, tiny, ctx);
        Complex target = -log(Complex(one) - z);
        Real resid = abs(val - target);
        rep.cases.push_back(
            make_case("limit_q_to_0", "z=0.5 q=1e-6", resid, Real("1e-4", bits), ctx));
    }
    return rep;
}

}  // namespace qdilog
