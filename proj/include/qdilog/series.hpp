#pragma once
#include <functional>

#include "qdilog/complex.hpp"
#include "qdilog/precision.hpp"

namespace qdilog {

struct SeriesResult {
    Complex value;
    long terms_used = 0;
    Real tail_bound;  // bound actually achieved at the stopping index
};

// Neumaier-compensated complex accumulator at working precision.
class CompensatedSum {
public:
    explicit CompensatedSum(mpfr_prec_t bits)
        : sum_(0.0, 0.0, bits), comp_(0.0, 0.0, bits) {}
    void add(const Complex& t) {
        add_part(sum_.re, comp_.re, t.re);
        add_part(sum_.im, comp_.im, t.im);
    }
    Complex value() const { return Complex(sum_.re + comp_.re, sum_.im + comp_.im); }

private:
    static void add_part(Real& s, Real& c, const Real& t) {
        Real x = s + t;
        if (abs(s) >= abs(t))
            c += (s - x) + t;
        else
            c += (t - x) + s;
        s = x;
    }
    Complex sum_;
    Complex comp_;
};

// Tail-bounded series summation: terms are added from `start` upward until
// tail_bound(n) <= 10^(-digits) * max(1, |partial sum|). term(n) is called
// once per index, in increasing order (stateful closures are fine).
// tail_bound(n) must bound |sum over k > n of term(k)| from above.
// Throws NonConvergenceError past max_terms.
SeriesResult sum_series(const std::function<Complex(long)>& term,
                        const std::function<Real(long)>& tail_bound, long start,
                        const PrecisionContext& ctx, long max_terms = series_max_terms());

}  // namespace qdilog
