#include "qdilog/asymp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdilog {

namespace {

Real two_pi(mpfr_prec_t bits) { return Real::pi(bits) * 2L; }

Complex gamma_residue(int n, mpfr_prec_t bits) {
    // Res Gamma at -n = (-1)^n / n!
    Real r = Real(1L, bits) / factorial(static_cast<unsigned long>(n), bits);
    if (n % 2 == 1) r = -r;
    return Complex(r);
}

}  // namespace

Complex q1_coeff_corrected(int n, const Complex& zparam, const ThetaParam& theta,
                           const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    Complex zeta_val = hurwitz_zeta(Complex(Real(-n, bits)), zparam, ctx);
    Complex f_val = periodic_zeta(theta, Complex(Real(1 - n, bits)), ctx);
    return gamma_residue(n, bits) * zeta_val * f_val;
}

Complex q1_coeff_printed(int n, const Complex& zparam, const ThetaParam& theta,
                       const PrecisionContext& ctx) {
    // (-1)^{n+1} B_{n+1}(z) B_{n+1}(1, e^{2 pi i theta}) / ((n+1) (n+1)!)
    const mpfr_prec_t bits = ctx.bits();
    Complex lam = cis(two_pi(bits) * to_prec(theta.value(), bits));
    Complex bz = bernoulli_poly(n + 1, zparam, ctx);
    Complex bl = apostol_bernoulli(n + 1, Complex(Real(1L, bits)), lam, ctx);
    Real denom = Real(n + 1, bits) * factorial(static_cast<unsigned long>(n + 1), bits);
    Complex v = bz * bl / denom;
    if (n % 2 == 0) v = -v;  // (-1)^{n+1}
    return v;
}

AsymptoticExpansion q1_expansion(const Complex& zparam, const ThetaParam& theta, int N,
                                 Provenance provenance, const PrecisionContext& ctx) {
    if (N < 0) throw DomainError("q1_expansion: order must be >= 0");
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    if (!(zparam.re > one)) throw DomainError("q1_expansion: Re zparam must exceed 1");

    AsymptoticExpansion e;
    e.regime = Regime::q_to_1;
    e.order = N;
    e.remainder_exponent = N + 1;
    e.provenance = provenance;

    if (provenance == Provenance::closed_form) {
        e.terms.push_back({-1, periodic_zeta(theta, Complex(Real(2L, bits)), ctx)});
        Complex half_minus_z = Complex(Real("0.5", bits)) - zparam;
        e.terms.push_back({0, half_minus_z * periodic_zeta(theta, Complex(one), ctx)});
        for (int n = 1; n <= N; ++n)
            e.terms.push_back({n, q1_coeff_corrected(n, zparam, theta, ctx)});
    } else {
        auto g = [&](const Complex& s) { return integrand_g(s, zparam, theta, ctx); };
        const Real radius = ctx.make(0.25);
        const long nodes = residue_default_nodes(ctx);
        e.terms.push_back({-1, residue_at(g, Complex(one), radius, nodes, ctx).value});
        e.terms.push_back({0, residue_at(g, Complex(Real(0L, bits)), radius, nodes, ctx).value});
        for (int n = 1; n <= N; ++n)
            e.terms.push_back(
                {n, residue_at(g, Complex(Real(-n, bits)), radius, nodes, ctx).value});
    }
    return e;
}

Complex q0_ci_coeff_printed(int k, const Complex& zparam, const ThetaParam& theta,
                          const PrecisionContext& ctx) {
    // 4 (-1)^k psi^{(2k-1)}(z) B_{2k+1}(theta) / (2k+1)! * (2 pi)^{2k}
    const mpfr_prec_t bits = ctx.bits();
    Complex psi = polygamma(2 * k - 1, zparam, ctx);
    Complex bt = bernoulli_poly(2 * k + 1, Complex(to_prec(theta.value(), bits)), ctx);
    Real pref = pow_si(two_pi(bits), 2 * k) * 4L /
                factorial(static_cast<unsigned long>(2 * k + 1), bits);
    Complex v = psi * bt * Complex(pref);
    if (k % 2 == 1) v = -v;
    return v;
}

Complex q0_si_coeff_printed(int k, const Complex& zparam, const ThetaParam& theta,
                          const PrecisionContext& ctx) {
    // 4 (-1)^k psi^{(2k)}(z) B_{2k+2}(theta) / (2k+2)! * (2 pi)^{2k+1}
    const mpfr_prec_t bits = ctx.bits();
    Complex psi = polygamma(2 * k, zparam, ctx);
    Complex bt = bernoulli_poly(2 * k + 2, Complex(to_prec(theta.value(), bits)), ctx);
    Real pref = pow_si(two_pi(bits), 2 * k + 1) * 4L /
                factorial(static_cast<unsigned long>(2 * k + 2), bits);
    Complex v = psi * bt * Complex(pref);
    if (k % 2 == 1) v = -v;
    return v;
}

Complex q0_si_leading_printed(const ThetaParam& theta, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    Real g = Real::euler_gamma(bits);
    Complex b2 = bernoulli_poly(2, Complex(to_prec(theta.value(), bits)), ctx);
    return Complex(g * 4L / Real::pi(bits)) * b2;
}

Complex q0_si_leading_psi_variant(const Complex& zparam, const ThetaParam& theta,
                                  const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    Complex psi = digamma(zparam, ctx);
    Complex b2 = bernoulli_poly(2, Complex(to_prec(theta.value(), bits)), ctx);
    return -(Complex(Real(4L, bits) / Real::pi(bits)) * psi * b2);
}

AsymptoticExpansion q0_expansion(const Complex& zparam, const ThetaParam& theta, int N,
                                 Q0Part part, Provenance provenance, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("q0_expansion: order must be >= 1");
    const mpfr_prec_t bits = ctx.bits();
    const Real one(1L, bits);
    if (!(zparam.re > one)) throw DomainError("q0_expansion: Re zparam must exceed 1");

    if (part == Q0Part::combined) {
        AsymptoticExpansion ci = q0_expansion(zparam, theta, N, Q0Part::ci, provenance, ctx);
        AsymptoticExpansion si = q0_expansion(zparam, theta, N, Q0Part::si, provenance, ctx);
        AsymptoticExpansion e;
        e.regime = Regime::q_to_0;
        e.order = N;
        e.remainder_exponent = std::min(ci.remainder_exponent, si.remainder_exponent);
        e.provenance = provenance;
        const Complex iunit(Real(0L, bits), Real(1L, bits));
        for (const auto& t : si.terms) e.terms.push_back({t.power, iunit * t.coeff});
        for (const auto& t : ci.terms) {
            auto it = std::find_if(e.terms.begin(), e.terms.end(),
                                   [&](const ExpansionTerm& u) { return u.power == t.power; });
            if (it == e.terms.end())
                e.terms.push_back(t);
            else
                it->coeff += t.coeff;
        }
        std::sort(e.terms.begin(), e.terms.end(),
                  [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.power < b.power; });
        return e;
    }

    AsymptoticExpansion e;
    e.regime = Regime::q_to_0;
    e.order = N;
    e.provenance = provenance;
    const bool is_ci = (part == Q0Part::ci);
    e.remainder_exponent = is_ci ? -(2 * N + 1) : -(2 * N + 2);

    const Real radius = ctx.make(0.25);
    const long nodes = residue_default_nodes(ctx);
    auto f = [&](const Complex& s) {
        return is_ci ? integrand_ci(s, zparam, theta, ctx) : integrand_si(s, zparam, theta, ctx);
    };

    if (!is_ci) {
        // power -1 slot: no pole is crossed at s=1 by the rightward shift; the
        // printed (4 gamma/pi) B2(theta) candidate fills it under closed_form.
        Complex lead = (provenance == Provenance::closed_form)
                           ? q0_si_leading_printed(theta, ctx)
                           : Complex(Real(0L, bits));
        e.terms.push_back({-1, lead});
    }
    for (int k = 1; k <= N; ++k) {
        long pole = is_ci ? 2 * k : 2 * k + 1;
        long power = -pole;
        Complex coeff;
        if (provenance == Provenance::closed_form) {
            coeff = is_ci ? q0_ci_coeff_printed(k, zparam, theta, ctx)
                          : q0_si_coeff_printed(k, zparam, theta, ctx);
        } else {
            // rightward shift subtracts the residues
            coeff = -(residue_at(f, Complex(Real(pole, bits)), radius, nodes, ctx).value);
        }
        e.terms.push_back({power, coeff});
    }
    std::sort(e.terms.begin(), e.terms.end(),
              [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.power < b.power; });
    return e;
}

Complex eval_expansion(const AsymptoticExpansion& e, const Real& x, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    CompensatedSum acc(bits);
    Real xb = to_prec(x, bits);
    for (const auto& t : e.terms) acc.add(t.coeff * Complex(pow_si(xb, t.power)));
    return acc.value();
}

double empirical_order(const std::vector<Real>& xs, const std::vector<Real>& errs) {
    if (xs.size() != errs.size() || xs.size() < 3)
        throw UnusableDataError("empirical_order: need at least 3 matched samples");
    const mpfr_prec_t bits = xs.front().prec();
    Real sx(0L, bits), sy(0L, bits), sxx(0L, bits), sxy(0L, bits);
    const long n = static_cast<long>(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > Real(0L, bits)) || !(errs[i] > Real(0L, bits)))
            throw UnusableDataError("empirical_order: samples must be positive");
        Real lx = log(xs[i]);
        Real ly = log(errs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    Real denom = Real(n, bits) * sxx - sx * sx;
    if (denom.is_zero()) throw UnusableDataError("empirical_order: degenerate abscissae");
    Real slope = (Real(n, bits) * sxy - sx * sy) / denom;
    return slope.to_double();
}

int optimal_truncation(const Complex& zparam, const ThetaParam& theta, const Real& x,
                       Regime regime, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const int n_max = 40;
    Real xb = to_prec(x, bits);
    int best = 1;
    Real best_mag(-1L, bits);
    if (regime == Regime::q_to_1) {
        // envelope of the next two dropped terms: single-term magnitudes can
        // be degenerate (zeta(-n, z) vanishes on a parity class at integer z)
        std::vector<Real> mags;
        for (int n = 1; n <= n_max + 2; ++n)
            mags.push_back(abs(q1_coeff_corrected(n, zparam, theta, ctx)) * pow_si(xb, n));
        for (int n = 0; n <= n_max; ++n) {
            Real mag = max(mags[static_cast<size_t>(n)], mags[static_cast<size_t>(n + 1)]);
            if (best_mag < Real(0L, bits) || mag < best_mag) {
                best_mag = mag;
                best = n;
            }
        }
    } else {
        // the true q->0 coefficients vanish; scan the printed candidates'
        // scale so the scan still ranks truncations
        std::vector<Real> mags;
        for (int n = 2; n <= n_max / 2 + 2; ++n)
            mags.push_back(abs(q0_ci_coeff_printed(n, zparam, theta, ctx)) * pow_si(xb, -2 * n));
        for (int n = 1; n <= n_max / 2; ++n) {
            Real mag = max(mags[static_cast<size_t>(n - 1)], mags[static_cast<size_t>(n)]);
            if (best_mag < Real(0L, bits) || mag < best_mag) {
                best_mag = mag;
                best = n;
            }
        }
    }
    return best;
}

std::string expansion_csv(const AsymptoticExpansion& e, int digits) {
    std::ostringstream out;
    out << "power,coeff_re,coeff_im,provenance\n";
    const char* prov = e.provenance == Provenance::closed_form ? "closed_form" : "residue_oracle";
    for (const auto& t : e.terms)
        out << t.power << "," << t.coeff.re.to_string(digits) << "," << t.coeff.im.to_string(digits)
            << "," << prov << "\n";
    return out.str();
}

}  // namespace qdilog
