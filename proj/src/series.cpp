#include "qdilog/series.hpp"

namespace qdilog {

SeriesResult sum_series(const std::function<Complex(long)>& term,
                        const std::function<Real(long)>& tail_bound, long start,
                        const PrecisionContext& ctx, long max_terms) {
    CompensatedSum acc(ctx.bits());
    const Real eps = ctx.eps();
    const Real one(1L, ctx.bits());

    long n = start;
    long used = 0;
    while (used < max_terms) {
        Complex t = term(n);
        if (!t.is_finite()) throw DomainError("sum_series: non-finite term at index " + std::to_string(n));
        acc.add(t);
        ++used;

        Real bound = tail_bound(n);
        if (bound.sign() < 0) throw DomainError("sum_series: negative tail bound");
        Complex partial = acc.value();
        if (bound <= eps * max(one, abs(partial)))
            return SeriesResult{partial, used, bound};
        ++n;
    }
    Complex partial = acc.value();
    throw NonConvergenceError(
        "sum_series: iteration cap (" + std::to_string(max_terms) + ") exceeded", used,
        partial.re.to_string(ctx.digits()) + " " + partial.im.to_string(ctx.digits()) + "i");
}

}  // namespace qdilog
