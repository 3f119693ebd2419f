#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qdilog/asymp.hpp"

namespace qdilog {

struct CaseResult {
    std::string id;
    std::string inputs;
    std::string residual;   // decimal string at working digits
    std::string tolerance;  // decimal string
    bool pass = false;
    std::string note;       // adjudication detail, empty when none
};

struct VerificationReport {
    std::string suite;
    int digits = 0;
    std::vector<CaseResult> cases;
    std::string confirmed_variant;  // coefficient-formula adjudication label
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

struct KirillovCase {
    Real q;
    Complex z;
};
struct LerchCase {
    Real theta;
    Complex s;
};
struct BarnesCase {
    Real x;
    Complex zparam;
    Real theta;
    Real c;
};
struct LimitsCase {
    Complex z;
    std::vector<Real> qs;
};
struct CoefficientCase {
    Complex zparam;
    Real theta;
};

std::vector<KirillovCase> default_kirillov_grid(const PrecisionContext& ctx);
std::vector<LerchCase> default_lerch_grid(const PrecisionContext& ctx);
std::vector<BarnesCase> default_barnes_q1_grid(const PrecisionContext& ctx);
std::vector<BarnesCase> default_barnes_q0_grid(const PrecisionContext& ctx);
std::vector<LimitsCase> default_limits_grid(const PrecisionContext& ctx);
std::vector<CoefficientCase> default_coefficient_grid(const PrecisionContext& ctx);

// exp(Li2(z,q)) = sum z^n/(q;q)_n over the grid, relative tolerance
// 10^(-digits+10).
VerificationReport verify_kirillov(const std::vector<KirillovCase>& grid,
                                   const PrecisionContext& ctx);

// Lerch functional-equation residual over the grid, tolerance 10^(-digits+10).
VerificationReport verify_lerch(const std::vector<LerchCase>& grid, const PrecisionContext& ctx);

// Special-value identities: Hurwitz/Bernoulli, Apostol adjudication,
// polygamma vs an independent Euler-Maclaurin, Bernoulli reflection, parity
// sums (corrected orientation, printed one reported).
VerificationReport verify_special_values(const PrecisionContext& ctx);

// Barnes q=1 side: Cahen-Mellin calibration plus barnes_li2 against the
// series, absolute tolerance 10^(-digits+15).
VerificationReport verify_barnes_q1(const std::vector<BarnesCase>& grid,
                                    const PrecisionContext& ctx);

// Barnes q=0 side: ci2/si2 against the q-Clausen series plus the theta=1/2
// vanishing case.
VerificationReport verify_barnes_q0(const std::vector<BarnesCase>& grid,
                                    const PrecisionContext& ctx);

// Residue-oracle adjudication of every printed coefficient formula.
VerificationReport verify_coefficients(const std::vector<CoefficientCase>& grid,
                                       const PrecisionContext& ctx);

// Limit probes toward q=1 (strict decrease) and q=0 (explicit bound).
VerificationReport verify_limits(const std::vector<LimitsCase>& grid,
                                 const PrecisionContext& ctx);

// Independent fixed-shift Euler-Maclaurin for zeta(m, z), m >= 2: the
// cross-check oracle for the polygamma identities. Deliberately separate
// from the adaptive implementation in specfun.
Complex zeta_em_independent(int m, const Complex& z, const PrecisionContext& ctx);

}  // namespace qdilog
