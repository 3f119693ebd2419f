#pragma once
#include "qdilog/complex.hpp"
#include "qdilog/real.hpp"

namespace qdilog {

// Process-wide cache of exact Bernoulli numbers (B_1 = -1/2 convention),
// computed once up to the largest requested index and then read-only.
// Safe for concurrent readers.
class BernoulliTable {
public:
    // B_n at the given precision; extends the cache as needed.
    static Real number(int n, mpfr_prec_t bits);
    static int max_computed();
};

// Binomial coefficient C(n, k) as an exact integer converted to precision.
Real binomial(unsigned long n, unsigned long k, mpfr_prec_t bits);

}  // namespace qdilog
