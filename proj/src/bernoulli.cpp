#include "qdilog/bernoulli.hpp"

#include <gmp.h>

#include <mutex>
#include <vector>

namespace qdilog {
namespace {

// Minimal RAII rational; avoids pulling in gmpxx.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }
    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

struct Cache {
    std::mutex mu;
    std::vector<Rat> b;      // B_0..B_n exact (B_1 = -1/2)
    std::vector<Rat> at_row; // Akiyama-Tanigawa working row
};

Cache& cache() {
    static Cache c;
    return c;
}

// Extends the table through index n using Akiyama-Tanigawa (which yields the
// B_1 = +1/2 convention; we store -1/2).
void ensure_locked(Cache& c, int n) {
    int have = static_cast<int>(c.b.size());
    for (int m = have; m <= n; ++m) {
        c.at_row.emplace_back();
        mpq_set_ui(c.at_row[m].raw(), 1, static_cast<unsigned long>(m) + 1);
        for (int j = m; j >= 1; --j) {
            Rat diff;
            mpq_sub(diff.raw(), c.at_row[j - 1].raw(), c.at_row[j].raw());
            Rat jr;
            mpq_set_ui(jr.raw(), static_cast<unsigned long>(j), 1);
            mpq_mul(c.at_row[j - 1].raw(), jr.raw(), diff.raw());
        }
        Rat bm = c.at_row[0];
        if (m == 1) mpq_neg(bm.raw(), bm.raw());
        c.b.push_back(std::move(bm));
    }
}

}  // namespace

Real BernoulliTable::number(int n, mpfr_prec_t bits) {
    if (n < 0) throw DomainError("Bernoulli index must be non-negative");
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    ensure_locked(c, n);
    Real r(bits);
    mpfr_set_q(r.raw(), c.b[static_cast<size_t>(n)].raw(), MPFR_RNDN);
    return r;
}

int BernoulliTable::max_computed() {
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    return static_cast<int>(c.b.size()) - 1;
}

Real binomial(unsigned long n, unsigned long k, mpfr_prec_t bits) {
    mpz_t z;
    mpz_init(z);
    mpz_bin_uiui(z, n, k);
    Real r(bits);
    mpfr_set_z(r.raw(), z, MPFR_RNDN);
    mpz_clear(z);
    return r;
}

}  // namespace qdilog
