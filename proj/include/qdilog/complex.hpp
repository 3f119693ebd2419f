#pragma once
#include <string>

#include "qdilog/precision.hpp"
#include "qdilog/real.hpp"

namespace qdilog {

// Complex number at working precision; the universal value type of the
// library. Principal branches throughout (log, powers).
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(Real(0L, r.prec())) {}
    Complex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex conj() const { return Complex(re, -im); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& b) {
        return Complex(a.re * b, a.im * b);
    }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    friend Complex operator/(const Complex& a, const Real& b) {
        return Complex(a.re / b, a.im / b);
    }
    friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Complex exp(const Complex& z) {
    Real e = exp(z.re);
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.im);
    return Complex(e * c, e * s);
}

inline Complex log(const Complex& z) {
    // 0.5*log(re^2+im^2) avoids an extra sqrt rounding.
    Real m = norm2(z);
    return Complex(log(m) / 2, atan2(z.im, z.re));
}

inline Complex sqrt(const Complex& z) {
    Complex l = log(z);
    return exp(Complex(l.re / 2, l.im / 2));
}

inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }
inline Complex pow(const Complex& z, const Real& w) { return exp(Complex(w) * log(z)); }

inline Complex pow_si(const Complex& z, long n) {
    if (n == 0) return Complex(1.0, 0.0, z.prec());
    bool inv = n < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex base = z, acc(1.0, 0.0, z.prec());
    while (e) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    if (inv) return Real(1L, z.prec()) / acc;
    return acc;
}

inline Complex sin(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re);
    Real ey = exp(z.im), eyi = 1L / ey;
    Real ch = (ey + eyi) / 2, sh = (ey - eyi) / 2;
    return Complex(s * ch, c * sh);
}

inline Complex cos(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re);
    Real ey = exp(z.im), eyi = 1L / ey;
    Real ch = (ey + eyi) / 2, sh = (ey - eyi) / 2;
    return Complex(c * ch, -(s * sh));
}

// Unit phase e^{i t}.
inline Complex cis(const Real& t) {
    Real s(t.prec()), c(t.prec());
    sin_cos(s, c, t);
    return Complex(c, s);
}

inline Complex to_prec(const Complex& z, mpfr_prec_t bits) {
    return Complex(to_prec(z.re, bits), to_prec(z.im, bits));
}

inline void ensure_finite(const Complex& z, const char* what) {
    if (!z.is_finite()) throw DomainError(std::string(what) + ": non-finite result");
}

}  // namespace qdilog
