#include "hmfkernel/complexnum.hpp"

namespace hmf {

Complex exp(const Complex& z) {
  prec_t p = z.prec();
  Real m = exp(z.re);
  Real s(p), c(p);
  sin_cos(s, c, z.im);
  return Complex(m * c, m * s);
}

Complex log(const Complex& z) {
  return Complex(log(abs(z)), arg(z));
}

Complex pow(const Complex& z, const Complex& w) {
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  prec_t p = z.prec();
  if (n == 0) return Complex(1L, p);
  Complex base = n > 0 ? z : 1L / z;
  unsigned long e = n > 0 ? n : -(unsigned long)n;
  Complex acc(1L, p);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Complex cis(const Real& t) {
  Real s(t.prec()), c(t.prec());
  sin_cos(s, c, t);
  return Complex(c, s);
}

}  // namespace hmf
