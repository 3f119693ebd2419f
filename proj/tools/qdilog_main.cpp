// qdilog: evaluation, identity verification, expansion export, Barnes
// integration, and direct-vs-asymptotic crossover tables.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qdilog/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qdilog;

namespace {

// "re+imi" strings: "2", "-1.5", "1.5+0.2i", "3-1i", "0.7i"
Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw DomainError("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I') return Complex(ctx.make(s));

    s.pop_back();  // drop i
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        char c = s[i];
        if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // purely imaginary
        if (s.empty() || s == "+" ) return Complex(ctx.make(0L), ctx.make(1L));
        if (s == "-") return Complex(ctx.make(0L), ctx.make(-1L));
        return Complex(ctx.make(0L), ctx.make(s));
    }
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(ctx.make(re), ctx.make(im));
}

std::string num(const Real& v, int digits) { return v.to_string(digits); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + out_path);
    f << text;
}

json report_to_json(const VerificationReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["digits"] = rep.digits;
    j["pass"] = rep.all_pass();
    if (!rep.confirmed_variant.empty()) j["confirmed_variant"] = rep.confirmed_variant;
    json cases = json::array();
    for (const auto& c : rep.cases) {
        json jc;
        jc["id"] = c.id;
        jc["inputs"] = c.inputs;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        cases.push_back(jc);
    }
    j["cases"] = cases;
    return j;
}

std::string jstr(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

json load_grid_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open grid file: " + path);
    json j = json::parse(f, nullptr, true);
    if (j.is_object() && j.contains("cases")) j = j["cases"];
    if (!j.is_array()) throw DomainError("grid file must hold an array of case objects");
    return j;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidPrecisionError*>(&e)) return 2;
    if (dynamic_cast<const NonConvergenceError*>(&e)) return 4;
    if (dynamic_cast<const DivergenceError*>(&e)) return 4;
    if (dynamic_cast<const DomainError*>(&e)) return 3;  // includes PoleError
    if (dynamic_cast<const ResidueInstabilityError*>(&e)) return 3;
    return 4;
}

struct EvalArgs {
    std::string function;
    int prec = 50;
    std::string z, q, zparam, theta, s, lambda, x;
    int n = 0;
    bool n_set = false;
    std::string out;
};

int cmd_eval(const EvalArgs& a) {
    auto ctx = with_precision(a.prec);
    const int digits = ctx.digits();
    json params = json::object();
    Complex value(ctx.make(0L), ctx.make(0L));
    long terms = 0;

    auto need = [&](const std::string& v, const char* flag) -> const std::string& {
        if (v.empty())
            throw InvalidPrecisionError(std::string("eval ") + a.function + " requires " + flag);
        return v;
    };

    if (a.function == "li2q" || a.function == "qpolylog") {
        int order = (a.function == "li2q") ? 2 : (a.n_set ? a.n : 2);
        Complex z = parse_complex(need(a.z, "--z"), ctx);
        QParam q(ctx.make(need(a.q, "--q")), ctx);
        params["z"] = a.z;
        params["q"] = a.q;
        if (a.function == "qpolylog") params["n"] = order;
        value = q_polylog(order, z, q, ctx, &terms);
    } else if (a.function == "qlog") {
        Complex z = parse_complex(need(a.z, "--z"), ctx);
        QParam q(ctx.make(need(a.q, "--q")), ctx);
        params["z"] = a.z;
        params["q"] = a.q;
        value = q_log(z, q, ctx, &terms);
    } else if (a.function == "euler_series") {
        Complex z = parse_complex(need(a.z, "--z"), ctx);
        QParam q(ctx.make(need(a.q, "--q")), ctx);
        params["z"] = a.z;
        params["q"] = a.q;
        value = euler_series(z, q, ctx, &terms);
    } else if (a.function == "hurwitz") {
        Complex s = parse_complex(need(a.s, "--s"), ctx);
        Complex z = parse_complex(need(a.zparam, "--zparam"), ctx);
        params["s"] = a.s;
        params["zparam"] = a.zparam;
        value = hurwitz_zeta(s, z, ctx);
    } else if (a.function == "periodic_zeta") {
        ThetaParam th(ctx.make(need(a.theta, "--theta")), ctx);
        Complex s = parse_complex(need(a.s, "--s"), ctx);
        params["theta"] = a.theta;
        params["s"] = a.s;
        value = periodic_zeta(th, s, ctx);
    } else if (a.function == "polylog") {
        Complex s = parse_complex(need(a.s, "--s"), ctx);
        Complex z = parse_complex(need(a.z, "--z"), ctx);
        params["s"] = a.s;
        params["z"] = a.z;
        value = polylog(s, z, ctx);
    } else if (a.function == "polygamma") {
        if (!a.n_set) throw InvalidPrecisionError("eval polygamma requires --n");
        Complex z = parse_complex(need(a.zparam, "--zparam"), ctx);
        params["n"] = a.n;
        params["zparam"] = a.zparam;
        value = polygamma(a.n, z, ctx);
    } else if (a.function == "bernoulli") {
        if (!a.n_set) throw InvalidPrecisionError("eval bernoulli requires --n");
        Complex z = parse_complex(need(a.z, "--z"), ctx);
        params["n"] = a.n;
        params["z"] = a.z;
        value = bernoulli_poly(a.n, z, ctx);
    } else if (a.function == "apostol") {
        if (!a.n_set) throw InvalidPrecisionError("eval apostol requires --n");
        Complex x = parse_complex(need(a.z, "--z"), ctx);
        Complex lam = parse_complex(need(a.lambda, "--lambda"), ctx);
        params["n"] = a.n;
        params["z"] = a.z;
        params["lambda"] = a.lambda;
        value = apostol_bernoulli(a.n, x, lam, ctx);
    } else {
        std::cerr << "unknown function: " << a.function << "\n";
        return 2;
    }

    json j;
    j["function"] = a.function;
    j["params"] = params;
    j["value_re"] = num(value.re, digits);
    j["value_im"] = num(value.im, digits);
    j["digits"] = digits;
    j["terms_used"] = terms;
    emit(j.dump(2) + "\n", a.out);
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::string grid = "default";
    int prec = 50;
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    auto ctx = with_precision(a.prec);
    const auto bits = ctx.bits();
    const bool from_file = a.grid != "default";
    json gj;
    if (from_file) gj = load_grid_file(a.grid);

    VerificationReport rep;
    if (a.suite == "kirillov") {
        auto grid = default_kirillov_grid(ctx);
        if (from_file) {
            grid.clear();
            for (const auto& c : gj)
                grid.push_back({Real(jstr(c.at("q")), bits),
                                Complex(Real(jstr(c.value("z_re", json("0"))), bits),
                                        Real(jstr(c.value("z_im", json("0"))), bits))});
        }
        rep = verify_kirillov(grid, ctx);
    } else if (a.suite == "lerch") {
        auto grid = default_lerch_grid(ctx);
        if (from_file) {
            grid.clear();
            for (const auto& c : gj)
                grid.push_back({Real(jstr(c.at("theta")), bits),
                                Complex(Real(jstr(c.value("s_re", json("2.5"))), bits),
                                        Real(jstr(c.value("s_im", json("0"))), bits))});
        }
        rep = verify_lerch(grid, ctx);
    } else if (a.suite == "special_values") {
        if (from_file) {
            std::cerr << "suite special_values uses its built-in grid\n";
            return 2;
        }
        rep = verify_special_values(ctx);
    } else if (a.suite == "barnes_q1" || a.suite == "barnes_q0") {
        auto grid = a.suite == "barnes_q1" ? default_barnes_q1_grid(ctx)
                                           : default_barnes_q0_grid(ctx);
        if (from_file) {
            grid.clear();
            for (const auto& c : gj)
                grid.push_back({Real(jstr(c.at("x")), bits),
                                Complex(Real(jstr(c.value("zparam_re", json("2"))), bits),
                                        Real(jstr(c.value("zparam_im", json("0"))), bits)),
                                Real(jstr(c.at("theta")), bits),
                                Real(jstr(c.value("c", json("1.5"))), bits)});
        }
        rep = a.suite == "barnes_q1" ? verify_barnes_q1(grid, ctx) : verify_barnes_q0(grid, ctx);
    } else if (a.suite == "coefficients") {
        auto grid = default_coefficient_grid(ctx);
        if (from_file) {
            grid.clear();
            for (const auto& c : gj)
                grid.push_back({Complex(Real(jstr(c.value("zparam_re", json("2"))), bits),
                                        Real(jstr(c.value("zparam_im", json("0"))), bits)),
                                Real(jstr(c.at("theta")), bits)});
        }
        rep = verify_coefficients(grid, ctx);
    } else if (a.suite == "limits") {
        auto grid = default_limits_grid(ctx);
        if (from_file) {
            grid.clear();
            for (const auto& c : gj) {
                LimitsCase lc;
                lc.z = Complex(Real(jstr(c.value("z_re", json("0.5"))), bits),
                               Real(jstr(c.value("z_im", json("0"))), bits));
                for (const auto& q : c.at("qs")) lc.qs.push_back(Real(jstr(q), bits));
                grid.push_back(lc);
            }
        }
        rep = verify_limits(grid, ctx);
    } else {
        std::cerr << "unknown suite: " << a.suite << "\n";
        return 2;
    }

    emit(report_to_json(rep).dump(2) + "\n", a.out);
    return rep.all_pass() ? 0 : 1;
}

struct ExpandArgs {
    std::string regime;
    std::string zparam = "2";
    std::string theta = "0.3";
    int order = 3;
    std::string part = "combined";
    std::string provenance = "closed_form";
    int prec = 50;
    std::string out;
};

int cmd_expand(const ExpandArgs& a) {
    auto ctx = with_precision(a.prec);
    Complex z = parse_complex(a.zparam, ctx);
    ThetaParam th(ctx.make(a.theta), ctx);
    Provenance prov;
    if (a.provenance == "closed_form" || a.provenance == "closed")
        prov = Provenance::closed_form;
    else if (a.provenance == "residue_oracle" || a.provenance == "oracle")
        prov = Provenance::residue_oracle;
    else {
        std::cerr << "unknown provenance: " << a.provenance << "\n";
        return 2;
    }

    AsymptoticExpansion e;
    if (a.regime == "q1") {
        e = q1_expansion(z, th, a.order, prov, ctx);
    } else if (a.regime == "q0") {
        Q0Part part;
        if (a.part == "ci")
            part = Q0Part::ci;
        else if (a.part == "si")
            part = Q0Part::si;
        else if (a.part == "combined")
            part = Q0Part::combined;
        else {
            std::cerr << "unknown part: " << a.part << "\n";
            return 2;
        }
        e = q0_expansion(z, th, a.order, part, prov, ctx);
    } else {
        std::cerr << "unknown regime: " << a.regime << "\n";
        return 2;
    }
    emit(expansion_csv(e, ctx.digits()), a.out);
    return 0;
}

struct IntegralArgs {
    std::string which;
    std::string x = "1";
    std::string zparam = "2";
    std::string theta = "0.3";
    std::string c = "1.5";
    int prec = 50;
    std::string out;
};

int cmd_integral(const IntegralArgs& a) {
    auto ctx = with_precision(a.prec);
    Real c = ctx.make(a.c);
    const Real one(1L, ctx.bits());
    // abscissa strip checks are usage errors, not math errors
    if (a.which == "li2") {
        if (!(c > one)) {
            std::cerr << "li2 requires c > 1\n";
            return 2;
        }
    } else if (a.which == "ci2" || a.which == "si2") {
        if (!(c > one) || !(c < Real(2L, ctx.bits()))) {
            std::cerr << a.which << " requires 1 < c < 2\n";
            return 2;
        }
    } else {
        std::cerr << "unknown integral: " << a.which << "\n";
        return 2;
    }

    ThetaParam th(ctx.make(a.theta), ctx);
    ExponentialParam p(ctx.make(a.x), parse_complex(a.zparam, ctx), th, ctx);
    QuadResult r;
    if (a.which == "li2")
        r = barnes_li2(p, c, ctx);
    else if (a.which == "ci2")
        r = barnes_ci2(p, c, ctx);
    else
        r = barnes_si2(p, c, ctx);

    json j;
    j["which"] = a.which;
    j["x"] = a.x;
    j["zparam"] = a.zparam;
    j["theta"] = a.theta;
    j["c"] = a.c;
    j["digits"] = ctx.digits();
    j["value_re"] = num(r.value.re, ctx.digits());
    j["value_im"] = num(r.value.im, ctx.digits());
    j["nodes_used"] = r.nodes;
    j["self_consistency_estimate"] = num(r.truncation_estimate, 8);
    emit(j.dump(2) + "\n", a.out);
    return 0;
}

struct CrossoverArgs {
    std::string zparam = "2";
    std::string theta = "0.3";
    std::vector<std::string> xs;
    int prec = 30;
    std::string out;
};

int cmd_crossover(const CrossoverArgs& a) {
    auto ctx = with_precision(a.prec);
    auto ref_ctx = with_precision(2 * a.prec);
    std::ostringstream csv;
    csv << "x,direct_terms,direct_time,asymp_N,asymp_error,direct_error\n";
    Complex z = parse_complex(a.zparam, ctx);
    Complex z_hi = parse_complex(a.zparam, ref_ctx);
    ThetaParam th(ctx.make(a.theta), ctx);
    ThetaParam th_hi(ref_ctx.make(a.theta), ref_ctx);

    for (const auto& xs : a.xs) {
        Real x = ctx.make(xs);
        ExponentialParam p(x, z, th, ctx);

        // reference at doubled precision
        ExponentialParam p_hi(ref_ctx.make(xs), z_hi, th_hi, ref_ctx);
        Complex ref = q_polylog(2, p_hi.omega(ref_ctx), p_hi.q(ref_ctx), ref_ctx);

        long terms = 0;
        auto t0 = std::chrono::steady_clock::now();
        Complex direct = q_polylog(2, p.omega(ctx), p.q(ctx), ctx, &terms);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();

        int n_opt = optimal_truncation(z, th, x, Regime::q_to_1, ctx);
        auto e = q1_expansion(z, th, n_opt, Provenance::closed_form, ctx);
        Complex approx = eval_expansion(e, x, ctx);

        Real direct_err = abs(direct - to_prec(ref, ctx.bits()));
        Real asymp_err = abs(approx - to_prec(ref, ctx.bits()));
        csv << xs << "," << terms << "," << secs << "," << n_opt << ","
            << asymp_err.to_string(8) << "," << direct_err.to_string(8) << "\n";
    }
    emit(csv.str(), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-dilogarithm toolkit: evaluation, Barnes integrals, asymptotic expansions, "
                 "verification suites"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a library function");
    eval->add_option("function", ea.function,
                     "li2q|qlog|qpolylog|hurwitz|periodic_zeta|polylog|polygamma|bernoulli|"
                     "apostol|euler_series")
        ->required();
    eval->add_option("--prec", ea.prec, "working precision in decimal digits");
    eval->add_option("--z", ea.z, "complex argument, re+imi");
    eval->add_option("--q", ea.q, "deformation parameter in (0,1)");
    eval->add_option("--zparam", ea.zparam, "complex parameter, re+imi");
    eval->add_option("--theta", ea.theta, "angle parameter in (0,1)");
    eval->add_option("--s", ea.s, "complex exponent, re+imi");
    eval->add_option("--lambda", ea.lambda, "Apostol parameter, re+imi");
    eval->add_option("--x", ea.x, "positive real");
    eval->add_option("--n", ea.n, "integer order")->each([&](const std::string&) { ea.n_set = true; });
    eval->add_option("--out", ea.out, "output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", va.suite,
                       "kirillov|lerch|special_values|barnes_q1|barnes_q0|coefficients|limits")
        ->required();
    verify->add_option("--grid", va.grid, "default, or a JSON grid file");
    verify->add_option("--prec", va.prec, "working precision in decimal digits");
    verify->add_option("--out", va.out, "output file (default stdout)");

    ExpandArgs xa;
    auto* expand = app.add_subcommand("expand", "export asymptotic-expansion coefficients as CSV");
    expand->add_option("regime", xa.regime, "q1|q0")->required();
    expand->add_option("--zparam", xa.zparam, "complex parameter, Re > 1");
    expand->add_option("--theta", xa.theta, "angle parameter in (0,1)");
    expand->add_option("--order", xa.order, "truncation order N");
    expand->add_option("--part", xa.part, "ci|si|combined (q0 only)");
    expand->add_option("--provenance", xa.provenance, "closed_form|residue_oracle");
    expand->add_option("--prec", xa.prec, "working precision in decimal digits");
    expand->add_option("--out", xa.out, "output file (default stdout)");

    IntegralArgs ia;
    auto* integral = app.add_subcommand("integral", "evaluate a Barnes contour integral");
    integral->add_option("--which", ia.which, "li2|ci2|si2")->required();
    integral->add_option("--x", ia.x, "positive real");
    integral->add_option("--zparam", ia.zparam, "complex parameter, Re > 1");
    integral->add_option("--theta", ia.theta, "angle parameter in (0,1)");
    integral->add_option("--c", ia.c, "contour abscissa");
    integral->add_option("--prec", ia.prec, "working precision in decimal digits");
    integral->add_option("--out", ia.out, "output file (default stdout)");

    CrossoverArgs ca;
    auto* crossover =
        app.add_subcommand("crossover", "direct-series vs asymptotic cost/accuracy table");
    crossover->add_option("--zparam", ca.zparam, "complex parameter, Re > 1");
    crossover->add_option("--theta", ca.theta, "angle parameter in (0,1)");
    crossover->add_option("--xs", ca.xs, "x values")->delimiter(',');
    crossover->add_option("--prec", ca.prec, "working precision in decimal digits");
    crossover->add_option("--out", ca.out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return cmd_eval(ea);
        if (*verify) return cmd_verify(va);
        if (*expand) return cmd_expand(xa);
        if (*integral) return cmd_integral(ia);
        if (*crossover) return cmd_crossover(ca);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
