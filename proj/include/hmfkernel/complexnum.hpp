#pragma once

#include "hmfkernel/real.hpp"

namespace hmf {

// Complex number on two Reals.  Principal branch everywhere: log has
// arg in (-pi, pi] (arg = pi on the negative real axis) and z^w = exp(w log z).
struct Complex {
  Real re, im;

  explicit Complex(prec_t prec = 256) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r, prec_t prec) : re(r, prec), im(prec) {}
  explicit Complex(Real r) : re(std::move(r)), im(re.prec()) {}

  prec_t prec() const { return std::max(re.prec(), im.prec()); }
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
  friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
  friend Complex operator*(const Complex& a, long b) {
    return Complex(a.re * b, a.im * b);
  }
  friend Complex operator/(const Complex& a, const Real& b) {
    return Complex(a.re / b, a.im / b);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm would be overkill at these exponent ranges; the
    // naive quotient is fine with MPFR's exponent headroom.
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d,
                   (a.im * b.re - a.re * b.im) / d);
  }
  friend Complex operator/(long a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Complex(a * b.re / d, -(a * b.im) / d);
  }

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

Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
// z^w = exp(w log z), principal branch.
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);

// exp(i*t)
Complex cis(const Real& t);

inline Complex mul_i(const Complex& z) { return Complex(-z.im, z.re); }

}  // namespace hmf
