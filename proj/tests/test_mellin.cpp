#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdilog/mellin.hpp"

using namespace qdilog;

namespace {

Complex cplx(const PrecisionContext& ctx, double re, double im = 0.0) {
    return Complex(re, im, ctx.bits());
}

}  // namespace

TEST_CASE("contour spec validation") {
    auto ctx = with_precision(20);
    ContourSpec bad{ctx.make(1.5), ctx.make(1e6), ctx.make(1e-4)};
    CHECK_THROWS_AS(bad.validate(ctx), DomainError);
    ContourSpec ok{ctx.make(1.5), ctx.make(30.0), ctx.make(0.125)};
    CHECK_NOTHROW(ok.validate(ctx));
}

TEST_CASE("Cahen-Mellin calibration: Gamma inverts to exp(-x)") {
    auto ctx = with_precision(30);
    auto f = [&](const Complex& s) { return gamma(s, ctx); };
    ContourSpec spec{ctx.make(1.5), ctx.make(42.0), ctx.make(0.0625)};
    for (double xv : {1.0, 2.5}) {
        auto r = vertical_line_integral(f, spec, ctx.make(xv), ctx);
        Real ref = exp(ctx.make(-xv));
        CHECK(abs(r.value - Complex(ref)) <= Real::pow10(-20, ctx.bits()));
        CHECK(abs(r.value.im) <= Real::pow10(-20, ctx.bits()));
    }
}

TEST_CASE("halving the step changes the result by less than the estimate") {
    auto ctx = with_precision(25);
    auto f = [&](const Complex& s) { return gamma(s, ctx); };
    Real x = ctx.make(1.0);
    ContourSpec coarse{ctx.make(1.5), ctx.make(40.0), ctx.make(0.04)};
    ContourSpec fine{ctx.make(1.5), ctx.make(40.0), ctx.make(0.02)};
    auto a = vertical_line_integral(f, coarse, x, ctx);
    auto b = vertical_line_integral(f, fine, x, ctx);
    CHECK(abs(a.value - b.value) <= max(a.truncation_estimate, Real::pow10(-24, ctx.bits())));
}

TEST_CASE("quadrature error decreases monotonically under step halving") {
    auto ctx = with_precision(25);
    const auto bits = ctx.bits();
    auto f = [&](const Complex& s) { return gamma(s, ctx); };
    Real x = ctx.make(1.0);
    Real ref = exp(ctx.make(-1.0));
    Real prev_err(-1L, bits);
    // discretization dominates at these steps; below ~0.1 the truncation
    // floor takes over and the sequence flattens
    for (double h : {1.0, 0.5, 0.25, 0.125}) {
        ContourSpec spec{ctx.make(1.5), ctx.make(45.0), ctx.make(h)};
        auto r = vertical_line_integral(f, spec, x, ctx);
        Real err = abs(r.value - Complex(ref));
        if (prev_err >= Real(0L, bits)) CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err <= Real::pow10(-20, bits));
}

TEST_CASE("divergence detection on a growing integrand") {
    auto ctx = with_precision(20);
    auto f = [&](const Complex& s) { return cos(s * Complex(Real(2L, ctx.bits()))); };
    ContourSpec spec{ctx.make(1.5), ctx.make(60.0), ctx.make(0.25)};
    CHECK_THROWS_AS(vertical_line_integral(f, spec, ctx.make(1.0), ctx), DivergenceError);
}

TEST_CASE("integrand_g pole guard and regular values") {
    auto ctx = with_precision(30);
    ThetaParam th(0.3, ctx);
    Complex z2 = cplx(ctx, 2.0);
    CHECK_THROWS_AS(integrand_g(cplx(ctx, 1.0), z2, th, ctx), PoleError);
    CHECK_THROWS_AS(integrand_g(cplx(ctx, 0.0), z2, th, ctx), PoleError);
    CHECK_THROWS_AS(integrand_g(cplx(ctx, -2.0), z2, th, ctx), PoleError);

    // product wiring at a regular point
    Complex g = integrand_g(cplx(ctx, 2.5), z2, th, ctx);
    Complex expect = hurwitz_zeta(cplx(ctx, 2.5), z2, ctx) *
                     periodic_zeta(th, cplx(ctx, 3.5), ctx) * gamma(cplx(ctx, 2.5), ctx);
    CHECK(abs(g - expect) <= ctx.tol(5) * abs(expect));

    // regular halfway between poles
    CHECK_NOTHROW(integrand_g(cplx(ctx, -0.5), z2, th, ctx));
}

TEST_CASE("residue_at: gamma residues and stability checks") {
    auto ctx = with_precision(30);
    const auto bits = ctx.bits();
    auto g = [&](const Complex& s) { return gamma(s, ctx); };
    Real fact(1L, bits);
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) fact = fact * Real(n, bits);
        auto r = residue_at(g, cplx(ctx, -static_cast<double>(n)), ctx.make(0.25),
                            residue_default_nodes(ctx), ctx);
        Real expect = Real(1L, bits) / fact;
        if (n % 2 == 1) expect = -expect;
        CHECK(abs(r.value - Complex(expect)) <= ctx.tol(8) * max(Real(1L, bits), abs(expect)));
    }

    // simple pole with unit residue
    auto pole_fn = [&](const Complex& s) {
        return Real(1L, bits) / (s - cplx(ctx, 0.5, 0.25));
    };
    auto pr = residue_at(pole_fn, cplx(ctx, 0.5, 0.25), ctx.make(0.2),
                         residue_default_nodes(ctx), ctx);
    CHECK(abs(pr.value - Complex(Real(1L, bits))) <= ctx.tol(10));

    // second singularity between r/2 and r trips the instability check
    auto pair_fn = [&](const Complex& s) {
        return Real(1L, bits) / ((s - cplx(ctx, 0.0)) * (s - cplx(ctx, 0.15)));
    };
    CHECK_THROWS_AS(
        residue_at(pair_fn, cplx(ctx, 0.0), ctx.make(0.25), residue_default_nodes(ctx), ctx),
        ResidueInstabilityError);

    CHECK_THROWS_AS(residue_at(g, cplx(ctx, -1.0), ctx.make(0.75), 64, ctx), DomainError);
}

TEST_CASE("barnes_li2 equals the q-dilogarithm series") {
    auto ctx = with_precision(25);
    ThetaParam th(0.3, ctx);
    ExponentialParam p(ctx.make(1.0), cplx(ctx, 2.0), th, ctx);
    auto r = barnes_li2(p, ctx.make(1.5), ctx);
    Complex ref = q_polylog(2, p.omega(ctx), p.q(ctx), ctx);
    CHECK(abs(r.value - ref) <= Real::pow10(-15, ctx.bits()));

    CHECK_THROWS_AS(barnes_li2(p, ctx.make(0.5), ctx), DomainError);
}

TEST_CASE("barnes_li2 independent of the abscissa") {
    auto ctx = with_precision(20);
    ThetaParam th(0.3, ctx);
    ExponentialParam p(ctx.make(1.5), cplx(ctx, 2.0), th, ctx);
    auto a = barnes_li2(p, ctx.make(1.2), ctx);
    auto b = barnes_li2(p, ctx.make(1.8), ctx);
    Real tol = max(a.truncation_estimate + b.truncation_estimate, Real::pow10(-16, ctx.bits()));
    CHECK(abs(a.value - b.value) <= tol * Real(50L, ctx.bits()));
}

TEST_CASE("barnes ci2/si2 match the q-Clausen pair and reassemble") {
    auto ctx = with_precision(25);
    const auto bits = ctx.bits();
    ThetaParam th(0.3, ctx);
    ExponentialParam p(ctx.make(8.0), cplx(ctx, 2.0), th, ctx);
    auto rc = barnes_ci2(p, ctx.make(1.5), ctx);
    auto rs = barnes_si2(p, ctx.make(1.5), ctx);
    auto [ci, si] = q_clausen_pair(p, ctx);
    CHECK(abs(rc.value - ci) <= Real::pow10(-15, bits));
    CHECK(abs(rs.value - si) <= Real::pow10(-15, bits));

    // (Amna) at the contour level: ci + i si = li2
    auto rl = barnes_li2(p, ctx.make(1.5), ctx);
    Complex iunit(Real(0L, bits), Real(1L, bits));
    CHECK(abs(rc.value + iunit * rs.value - rl.value) <= Real::pow10(-14, bits));

    CHECK_THROWS_AS(barnes_ci2(p, ctx.make(2.5), ctx), DomainError);
    CHECK_THROWS_AS(barnes_si2(p, ctx.make(1.0), ctx), DomainError);
}

TEST_CASE("barnes si2 vanishes identically at theta = 1/2") {
    auto ctx = with_precision(25);
    ThetaParam half(0.5, ctx);
    ExponentialParam p(ctx.make(8.0), cplx(ctx, 2.0), half, ctx);
    auto rs = barnes_si2(p, ctx.make(1.5), ctx);
    CHECK(abs(rs.value) <= Real::pow10(-20, ctx.bits()));
}

TEST_CASE("contour shift consistency on the q=1 side") {
    // barnes_li2 at c=1.5 equals the residues at s=1,0,-1,-2 plus the
    // remainder integral at d=-2.5, x=0.5
    auto ctx = with_precision(25);
    const auto bits = ctx.bits();
    ThetaParam th(0.3, ctx);
    Complex z2 = cplx(ctx, 2.0);
    Real x = ctx.make(0.5);
    ExponentialParam p(x, z2, th, ctx);

    auto g = [&](const Complex& s) { return integrand_g(s, z2, th, ctx); };
    auto full = barnes_li2(p, ctx.make(1.5), ctx);

    CompensatedSum acc(bits);
    const Real radius = ctx.make(0.25);
    const long nodes = residue_default_nodes(ctx);
    for (long pole : {1L, 0L, -1L, -2L}) {
        auto r = residue_at(g, Complex(Real(pole, bits)), radius, nodes, ctx);
        acc.add(r.value * Complex(pow_si(x, -pole)));
    }
    ContourSpec rem_spec{ctx.make(-2.5), ctx.make(40.0), ctx.make(0.03125)};
    auto rem = vertical_line_integral(g, rem_spec, x, ctx);
    acc.add(rem.value);

    CHECK(abs(full.value - acc.value()) <= Real::pow10(-16, bits));
}

TEST_CASE("contour shift consistency on the q=0 side") {
    // (1/2 pi i) int_c = (1/2 pi i) int_{c+2N} - residues in between (N=1)
    auto ctx = with_precision(25);
    const auto bits = ctx.bits();
    ThetaParam th(0.3, ctx);
    Complex z2 = cplx(ctx, 2.0);
    Real x = ctx.make(10.0);
    ExponentialParam p(x, z2, th, ctx);

    auto fci = [&](const Complex& s) { return integrand_ci(s, z2, th, ctx); };
    auto lhs = barnes_ci2(p, ctx.make(1.5), ctx);

    ContourSpec right{ctx.make(3.5), ctx.make(40.0), ctx.make(0.03125)};
    auto rem = vertical_line_integral(fci, right, x, ctx);
    auto res2 = residue_at(fci, cplx(ctx, 2.0), ctx.make(0.25), residue_default_nodes(ctx), ctx);
    Complex rhs = rem.value - res2.value * Complex(pow_si(x, -2));

    CHECK(abs(lhs.value - rhs) <= Real::pow10(-16, bits));
    // the crossed residue itself vanishes by the parity of the zeta bracket
    CHECK(abs(res2.value) <= Real::pow10(-20, bits));
}
