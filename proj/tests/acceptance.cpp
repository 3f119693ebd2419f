// Acceptance suite: one test case per criterion, one printed line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <sstream>

#include "qdilog/verify.hpp"

using namespace qdilog;

namespace {

void line(int n, bool pass, const std::string& detail) {
    std::cout << "[criterion " << n << "] " << (pass ? "PASS" : "FAIL") << ": " << detail
              << std::endl;
}

Real worst_residual(const VerificationReport& rep, mpfr_prec_t bits) {
    Real worst(0L, bits);
    for (const auto& c : rep.cases) {
        // residual strings may hold several values (limits suite); take the first token
        std::istringstream in(c.residual);
        std::string tok;
        in >> tok;
        try {
            Real r(tok, bits);
            if (r > worst) worst = r;
        } catch (const Error&) {
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("criterion 1: Kirillov identity at 50 digits") {
    auto ctx = with_precision(50);
    auto rep = verify_kirillov(default_kirillov_grid(ctx), ctx);
    bool pass = rep.all_pass();
    std::ostringstream d;
    d << rep.cases.size() << " grid points, worst relative residual "
      << worst_residual(rep, ctx.bits()).to_string(3) << " vs tolerance 1e-40";
    line(1, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 2: Barnes representation of Li2 at 30 digits") {
    auto ctx = with_precision(30);
    auto rep = verify_barnes_q1(default_barnes_q1_grid(ctx), ctx);
    // criterion 2 concerns the three barnes_li2 cases; the calibration case
    // belongs to criterion 9 and is checked there
    bool pass = true;
    Real worst(0L, ctx.bits());
    for (const auto& c : rep.cases) {
        if (c.id != "barnes_li2") continue;
        if (!c.pass) pass = false;
        Real r(c.residual, ctx.bits());
        if (r > worst) worst = r;
    }
    std::ostringstream d;
    d << "3 contour points vs series, worst |difference| " << worst.to_string(3)
      << " vs tolerance 1e-15";
    line(2, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 3: Barnes Ci/Si representations at 30 digits") {
    auto ctx = with_precision(30);
    auto rep = verify_barnes_q0(default_barnes_q0_grid(ctx), ctx);
    bool pass = rep.all_pass();
    std::ostringstream d;
    d << rep.cases.size() << " cases (ci2/si2 vs series plus the theta=1/2 vanishing), worst "
      << worst_residual(rep, ctx.bits()).to_string(3) << " vs tolerance 1e-15";
    line(3, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 4: q->1 truncation-order law") {
    auto ctx = with_precision(30);
    const auto bits = ctx.bits();
    Complex z(2.0, 0.0, bits);
    ThetaParam th(0.3, ctx);
    const Real floor = Real::pow10(-(ctx.digits() - 12), bits);

    bool pass = true;
    std::ostringstream d;
    for (int N : {2, 3, 4}) {
        auto e = q1_expansion(z, th, N, Provenance::closed_form, ctx);
        std::vector<Real> xs, errs;
        for (const char* xv : {"0.2", "0.1", "0.05", "0.025"}) {
            Real x(xv, bits);
            ExponentialParam p(x, z, th, ctx);
            Complex ref = q_polylog(2, p.omega(ctx), p.q(ctx), ctx);
            Real err = abs(eval_expansion(e, x, ctx) - ref);
            if (err > floor) {
                xs.push_back(x);
                errs.push_back(err);
            }
        }
        bool ok = false;
        double slope = 0.0;
        if (xs.size() >= 3) {
            slope = empirical_order(xs, errs);
            ok = std::abs(slope - (N + 1)) <= 0.5;
        }
        if (!ok) pass = false;
        d << "N=" << N << " slope=" << slope << " (want " << N + 1 << "+-0.5) ";
    }
    line(4, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 5: q->0 truncation-order laws (expected unattainable; see note)") {
    // Faithful implementation of the criterion as stated. The residue oracle
    // shows every q->0 power coefficient vanishes (the integrand brackets are
    // zero at the crossed poles by Bernoulli parity), so the truncation error
    // equals |Ci2| resp. |Si2| themselves, which decay exponentially, not as
    // a power; at 30 digits the samples at x in {40,80} also sit below the
    // precision floor. The criterion is asserted anyway and reported honestly.
    auto ctx = with_precision(30);
    const auto bits = ctx.bits();
    Complex z(2.0, 0.0, bits);
    ThetaParam th(0.3, ctx);
    const Real floor = Real::pow10(-(ctx.digits() - 12), bits);

    bool pass = true;
    std::ostringstream d;
    auto run_part = [&](Q0Part part, int N, int want_order) {
        auto e = q0_expansion(z, th, N, part, Provenance::residue_oracle, ctx);
        std::vector<Real> xs, errs;
        std::ostringstream samples;
        for (const char* xv : {"10", "20", "40", "80"}) {
            Real x(xv, bits);
            ExponentialParam p(x, z, th, ctx);
            auto [ci, si] = q_clausen_pair(p, ctx);
            const Complex& ref = (part == Q0Part::ci) ? ci : si;
            Real err = abs(eval_expansion(e, x, ctx) - ref);
            samples << " err(" << xv << ")=" << err.to_string(3);
            if (err > floor) {
                xs.push_back(x);
                errs.push_back(err);
            }
        }
        const char* tag = (part == Q0Part::ci) ? "ci" : "si";
        try {
            double slope = empirical_order(xs, errs);
            bool ok = std::abs(slope - (-want_order)) <= 0.5;
            if (!ok) pass = false;
            d << tag << " N=" << N << " slope=" << slope << " (want -" << want_order << "+-0.5;"
              << samples.str() << ") ";
        } catch (const UnusableDataError&) {
            pass = false;
            d << tag << " N=" << N << " unusable (" << xs.size()
              << " samples above the precision floor;" << samples.str() << ") ";
        }
    };
    for (int N : {1, 2, 3}) run_part(Q0Part::ci, N, 2 * N + 1);
    for (int N : {1, 2}) run_part(Q0Part::si, N, 2 * N + 2);

    if (!pass)
        d << "| analysis: all crossed residues vanish by zeta-bracket parity, so the expansion "
             "is identically zero and Ci2/Si2 are exponentially small (|terms| <= e^{-n Re z x}); "
             "no power law exists to fit";
    line(5, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 6: residue adjudication at 40 digits") {
    auto ctx = with_precision(40);
    auto rep = verify_coefficients(default_coefficient_grid(ctx), ctx);
    bool pass = rep.all_pass();
    std::ostringstream d;
    d << rep.cases.size() << " adjudications; confirmed: " << rep.confirmed_variant;
    line(6, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 7: special-value suites and Lerch residual at 50 digits") {
    auto ctx = with_precision(50);
    auto sv = verify_special_values(ctx);
    auto lr = verify_lerch(default_lerch_grid(ctx), ctx);
    bool pass = sv.all_pass() && lr.all_pass();
    std::ostringstream d;
    d << sv.cases.size() << " special-value cases (worst "
      << worst_residual(sv, ctx.bits()).to_string(3) << "), " << lr.cases.size()
      << " Lerch cases (worst " << worst_residual(lr, ctx.bits()).to_string(3)
      << " vs 1e-40); confirmed: " << sv.confirmed_variant;
    line(7, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 8: limit probes") {
    auto ctx = with_precision(30);
    auto rep = verify_limits(default_limits_grid(ctx), ctx);
    bool pass = rep.all_pass();
    std::ostringstream d;
    d << "q->1 deviations strictly decreasing over {0.9,0.99,0.999}; q->0 residual "
      << rep.cases.back().residual << " <= 1e-4";
    line(8, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 9: Cahen-Mellin calibration") {
    auto ctx = with_precision(30);
    const auto bits = ctx.bits();
    auto f = [&](const Complex& s) { return gamma(s, ctx); };
    ContourSpec spec{ctx.make(1.5), ctx.make(60.0), ctx.make(0.0625)};
    auto r = vertical_line_integral(f, spec, ctx.make(1.0), ctx);
    Real resid = abs(r.value - Complex(exp(Real(-1L, bits))));
    bool pass = resid <= Real::pow10(-20, bits);
    std::ostringstream d;
    d << "|quadrature - e^{-1}| = " << resid.to_string(3) << " vs tolerance 1e-20";
    line(9, pass, d.str());
    CHECK(pass);
}

TEST_CASE("criterion 10: precision monotonicity of criteria 1-3") {
    bool pass = true;
    std::ostringstream d;

    // criterion 1 values at 50 vs 100 digits
    {
        auto lo = with_precision(50);
        auto hi = with_precision(100);
        const Real tol = Real::pow10(-40, hi.bits());
        Real worst(0L, hi.bits());
        auto lo_grid = default_kirillov_grid(lo);
        auto hi_grid = default_kirillov_grid(hi);
        for (size_t i = 0; i < lo_grid.size(); ++i) {
            QParam ql(lo_grid[i].q, lo), qh(hi_grid[i].q, hi);
            Complex e_lo = euler_series(lo_grid[i].z, ql, lo);
            Complex e_hi = euler_series(hi_grid[i].z, qh, hi);
            Complex x_lo = exp(q_polylog(2, lo_grid[i].z, ql, lo));
            Complex x_hi = exp(q_polylog(2, hi_grid[i].z, qh, hi));
            Real d1 = abs(to_prec(e_lo, hi.bits()) - e_hi) / abs(e_hi);
            Real d2 = abs(to_prec(x_lo, hi.bits()) - x_hi) / abs(x_hi);
            if (d1 > worst) worst = d1;
            if (d2 > worst) worst = d2;
        }
        bool ok = worst <= tol;
        if (!ok) pass = false;
        d << "kirillov 50->100: worst shift " << worst.to_string(3) << " (tol 1e-40); ";
    }

    // criteria 2 and 3 values at 30 vs 60 digits
    {
        auto lo = with_precision(30);
        auto hi = with_precision(60);
        const Real tol = Real::pow10(-15, hi.bits());
        Real worst(0L, hi.bits());
        auto run_pair = [&](const BarnesCase& blo, const BarnesCase& bhi, bool q0_side) {
            ThetaParam tl(blo.theta, lo), thh(bhi.theta, hi);
            ExponentialParam pl(blo.x, blo.zparam, tl, lo), ph(bhi.x, bhi.zparam, thh, hi);
            if (!q0_side) {
                Complex vl = barnes_li2(pl, blo.c, lo).value;
                Complex vh = barnes_li2(ph, bhi.c, hi).value;
                Real dd = abs(to_prec(vl, hi.bits()) - vh);
                if (dd > worst) worst = dd;
            } else {
                Complex cl = barnes_ci2(pl, blo.c, lo).value;
                Complex ch = barnes_ci2(ph, bhi.c, hi).value;
                Complex sl = barnes_si2(pl, blo.c, lo).value;
                Complex sh = barnes_si2(ph, bhi.c, hi).value;
                Real d1 = abs(to_prec(cl, hi.bits()) - ch);
                Real d2 = abs(to_prec(sl, hi.bits()) - sh);
                if (d1 > worst) worst = d1;
                if (d2 > worst) worst = d2;
            }
        };
        auto g1lo = default_barnes_q1_grid(lo), g1hi = default_barnes_q1_grid(hi);
        for (size_t i = 0; i < g1lo.size(); ++i) run_pair(g1lo[i], g1hi[i], false);
        auto g0lo = default_barnes_q0_grid(lo), g0hi = default_barnes_q0_grid(hi);
        for (size_t i = 0; i < g0lo.size(); ++i) run_pair(g0lo[i], g0hi[i], true);
        bool ok = worst <= tol;
        if (!ok) pass = false;
        d << "barnes 30->60: worst shift " << worst.to_string(3) << " (tol 1e-15)";
    }

    line(10, pass, d.str());
    CHECK(pass);
}
