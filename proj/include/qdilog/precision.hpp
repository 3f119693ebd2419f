#pragma once
#include <cmath>
#include <cstdlib>
#include <string>

#include "qdilog/errors.hpp"
#include "qdilog/real.hpp"

namespace qdilog {

// Working-precision policy. All arithmetic runs at digits + guard_digits
// decimal digits; results are reported (serialized, compared) at digits.
// Guard digits absorb cancellation in alternating/oscillatory sums.
class PrecisionContext {
public:
    static constexpr int kMinDigits = 15;

    static PrecisionContext with_precision(int digits) {
        if (digits < kMinDigits)
            throw InvalidPrecisionError("precision must be at least 15 decimal digits, got " +
                                        std::to_string(digits));
        return PrecisionContext(digits, guard_for(digits));
    }

    int digits() const { return digits_; }
    int guard_digits() const { return guard_; }
    int work_digits() const { return digits_ + guard_; }

    // MPFR precision for the working digit count (plus a small margin).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(work_digits() * 3.3219280948873626)) + 16;
    }

    Real make(double x) const { return Real(x, bits()); }
    Real make(long x) const { return Real(x, bits()); }
    Real make(const std::string& s) const { return Real(s, bits()); }

    // 10^(-digits), the reported tolerance unit.
    Real eps() const { return Real::pow10(-digits_, bits()); }
    // 10^(-digits+k) for tolerance bands.
    Real tol(int k) const { return Real::pow10(-digits_ + k, bits()); }
    // 10^(-work_digits+k): internal stopping thresholds.
    Real work_tol(int k) const { return Real::pow10(-work_digits() + k, bits()); }

    // Same reported digits, more guard: used where an algebraic cancellation
    // of known magnitude must be absorbed.
    PrecisionContext with_extra_guard(int extra) const {
        PrecisionContext c(*this);
        if (extra > 0) c.guard_ += extra;
        return c;
    }
    PrecisionContext with_digits(int digits) const { return with_precision(digits); }

private:
    PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {}
    static int guard_for(int digits) { return digits / 10 > 10 ? digits / 10 : 10; }

    int digits_;
    int guard_;
};

inline PrecisionContext with_precision(int digits) {
    return PrecisionContext::with_precision(digits);
}

// Summation cap; QDILOG_MAX_TERMS overrides.
inline long series_max_terms() {
    static const long cap = [] {
        if (const char* e = std::getenv("QDILOG_MAX_TERMS")) {
            long v = std::atol(e);
            if (v > 0) return v;
        }
        return 10000000L;
    }();
    return cap;
}

}  // namespace qdilog
