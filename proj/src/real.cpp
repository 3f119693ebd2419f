#include "qdilog/real.hpp"

#include <cstdio>
#include <vector>

namespace qdilog {

std::string Real::to_string(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    // %.*Re prints `digits` digits after the leading one.
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

}  // namespace qdilog
