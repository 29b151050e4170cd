#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace hmf {

using prec_t = mpfr_prec_t;

// Arbitrary-precision real number backed by MPFR.  Each value carries its
// own precision; binary operations round to nearest at the larger operand
// precision.  There is no global rounding or precision state, so values and
// all operations on distinct objects are safe to use concurrently.
class Real {
  mpfr_t v_;

 public:
  explicit Real(prec_t prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(double x, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const mpz_class& x, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& x, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  // Parses a decimal literal, e.g. Real("0.3", 256).
  Real(const char* s, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, s, 10, MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  prec_t prec() const { return mpfr_get_prec(v_); }

  // Re-rounds the value to a new precision.
  Real round_to(prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string with round-half-even at the given significant digit count.
  std::string str(int digits = 30) const;

  friend prec_t max_prec(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
  }

#define HMF_REAL_BINOP(op, fn)                          \
  friend Real operator op(const Real& a, const Real& b) { \
    Real r(max_prec(a, b));                             \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                    \
    return r;                                           \
  }                                                     \
  friend Real operator op(const Real& a, long b) {      \
    Real r(a.prec());                                   \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                  \
    return r;                                           \
  }
  HMF_REAL_BINOP(+, mpfr_add)
  HMF_REAL_BINOP(-, mpfr_sub)
  HMF_REAL_BINOP(*, mpfr_mul)
  HMF_REAL_BINOP(/, mpfr_div)
#undef HMF_REAL_BINOP

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long a, const Real& b) { return b + a; }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
};

// Unary functions; result carries the operand's precision.
#define HMF_REAL_FN(name, fn)        \
  inline Real name(const Real& x) {  \
    Real r(x.prec());                \
    fn(r.raw(), x.raw(), MPFR_RNDN); \
    return r;                        \
  }
HMF_REAL_FN(abs, mpfr_abs)
HMF_REAL_FN(sqrt, mpfr_sqrt)
HMF_REAL_FN(exp, mpfr_exp)
HMF_REAL_FN(log, mpfr_log)
HMF_REAL_FN(log1p, mpfr_log1p)
HMF_REAL_FN(expm1, mpfr_expm1)
HMF_REAL_FN(sin, mpfr_sin)
HMF_REAL_FN(cos, mpfr_cos)
HMF_REAL_FN(atan, mpfr_atan)
HMF_REAL_FN(sinh, mpfr_sinh)
HMF_REAL_FN(cosh, mpfr_cosh)
HMF_REAL_FN(floor, mpfr_floor)
HMF_REAL_FN(ceil, mpfr_ceil)
#undef HMF_REAL_FN

inline void sin_cos(Real& s, Real& c, const Real& x) {
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real hypot(const Real& x, const Real& y) {
  Real r(max_prec(y, x));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline Real pow_si(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

// x^y for x > 0.
inline Real pow(const Real& x, const Real& y) {
  Real r(max_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

// Cached constants (copies are returned; the cache is mutex-guarded).
Real const_pi(prec_t prec);
Real const_euler(prec_t prec);   // Euler-Mascheroni gamma
Real const_log_2pi(prec_t prec);

// 2^-e as a Real, for tolerance construction.
inline Real pow2(long e, prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace hmf
