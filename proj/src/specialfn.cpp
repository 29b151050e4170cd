#include "hmfkernel/specialfn.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hmf::specialfn {

namespace {

void check_pole(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() <= 0 && mpfr_integer_p(z.re.raw()))
    throw PoleAtNonPositiveInteger("gamma family: pole at non-positive integer");
}

// Stirling parameters: number of Bernoulli terms and the shift radius that
// makes the smallest term fall below 2^-wp.  For m >= 1 the same estimate
// covers the polygamma series (the extra (2k+m-1)!/(2k)! growth is absorbed
// by a slightly larger radius).
struct StirlingPlan {
  int terms;
  double radius;
};

StirlingPlan stirling_plan(prec_t wp, int m) {
  int N = std::max<int>(64, static_cast<int>(wp / 8));
  // smallest-term estimate: |B_2N| Gamma(2N+m) / Gamma(2N+1) / R^{2N+m-1}
  double lnB = std::log(2.0) + std::lgamma(2.0 * N + 1) -
               2.0 * N * std::log(2 * M_PI);
  double lnR = (lnB + std::lgamma(2.0 * N + m) - std::lgamma(2.0 * N + 1) +
                0.693147 * (wp + 8)) /
               (2.0 * N + m - 1);
  return {N, std::max(4.0, std::exp(lnR))};
}

}  // namespace

Real bernoulli_2k(int k, prec_t prec) {
  // B_2k = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
  static std::mutex mu;
  static std::map<std::pair<int, prec_t>, Real> cache;
  prec_t p = ((prec + 63) / 64) * 64;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({k, p});
    if (it != cache.end()) return it->second;
  }
  prec_t wp = p + 32;
  Real z(wp);
  mpfr_zeta_ui(z.raw(), 2 * k, MPFR_RNDN);
  Real f(wp);
  mpfr_fac_ui(f.raw(), 2 * k, MPFR_RNDN);
  Real den = pow_si(2 * const_pi(wp), 2 * k);
  Real b = (2L * f * z / den).round_to(p);
  if (k % 2 == 0) b = -b;
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::make_pair(k, p), b);
  return b;
}

Complex log_gamma(const Complex& z, prec_t prec) {
  check_pole(z);
  prec_t wp = prec + 64;
  auto plan = stirling_plan(wp, 0);

  // Real positive arguments take the MPFR fast path.
  if (z.im.is_zero() && z.re.sign() > 0) {
    Real r(prec);
    mpfr_lngamma(r.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(r, Real(prec));
  }

  // Shift until |z + m| >= R and Re >= 1.
  Complex w(z.re.round_to(wp), z.im.round_to(wp));
  Complex acc(0L, wp);
  double zr = z.re.to_double(), zi = z.im.to_double();
  double need = plan.radius;
  long shift = 0;
  if (std::hypot(zr, zi) < need || zr < 1)
    shift = std::max<long>(std::lround(need - zr) + 1, 1);
  for (long j = 0; j < shift; ++j) {
    acc += log(w);
    w = w + Complex(1L, wp);
  }
  // Stirling: (w - 1/2) log w - w + log(2pi)/2 + sum B_2j / (2j(2j-1) w^{2j-1})
  Complex lw = log(w);
  Complex res = (w - Complex(Real("0.5", wp))) * lw - w +
                Complex(const_log_2pi(wp) / 2L);
  Complex w2 = 1L / (w * w);
  Complex t = 1L / w;
  Real tol = pow2(-(wp + 4), wp) * max(abs(res), Real(1L, wp));
  Real prev_mag(0L, wp);
  for (int j = 1; j <= plan.terms; ++j) {
    Complex term = t * (bernoulli_2k(j, wp) / Real(2L * j * (2L * j - 1), wp));
    Real mag = abs(term);
    if (j > 2 && mag > prev_mag) break;  // asymptotic minimum reached
    res += term;
    if (mag < tol) break;
    prev_mag = mag;
    t = t * w2;
  }
  res -= acc;
  return Complex(res.re.round_to(prec), res.im.round_to(prec));
}

Complex gamma(const Complex& z, prec_t prec) {
  if (z.im.is_zero() && z.re.sign() > 0) {
    Real r(prec);
    mpfr_gamma(r.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(r, Real(prec));
  }
  Complex g = exp(log_gamma(z, prec + 32));
  return Complex(g.re.round_to(prec), g.im.round_to(prec));
}

namespace {

// Shared shift-and-series driver for digamma (m = 0) and polygamma (m >= 1).
Complex psi_like(int m, const Complex& z, prec_t prec) {
  check_pole(z);
  prec_t wp = prec + 64;
  auto plan = stirling_plan(wp, m + 1);

  Complex w(z.re.round_to(wp), z.im.round_to(wp));
  Complex acc(0L, wp);
  double zr = z.re.to_double(), zi = z.im.to_double();
  long shift = 0;
  if (std::hypot(zr, zi) < plan.radius || zr < 1)
    shift = std::max<long>(std::lround(plan.radius - zr) + 1, 1);
  // psi^(m)(z) = psi^(m)(z + M) - sum_{j<M} (-1)^m m! / (z+j)^{m+1}
  Real mfact(wp);
  mpfr_fac_ui(mfact.raw(), m, MPFR_RNDN);
  for (long j = 0; j < shift; ++j) {
    acc += Complex(mfact) / pow(w, m + 1);
    w = w + Complex(1L, wp);
  }
  if (m % 2) acc = -acc;

  Complex res(0L, wp);
  Real tol = pow2(-(wp + 4), wp);
  Complex w1 = 1L / w;
  Complex w2 = w1 * w1;
  if (m == 0) {
    // log w - 1/(2w) - sum B_2k / (2k w^{2k})
    res = log(w) - w1 / 2L;
    Complex t = w2;
    Real prev_mag(0L, wp);
    for (int k = 1; k <= plan.terms; ++k) {
      Complex term = t * (bernoulli_2k(k, wp) / Real(2L * k, wp));
      Real mag = abs(term);
      if (k > 2 && mag > prev_mag) break;
      res -= term;
      if (mag < tol) break;
      prev_mag = mag;
      t = t * w2;
    }
  } else {
    // (-1)^{m-1} [ (m-1)!/w^m + m!/(2 w^{m+1}) + sum B_2k (2k+m-1)!/((2k)! w^{2k+m}) ]
    Real m1fact(wp);
    mpfr_fac_ui(m1fact.raw(), m - 1, MPFR_RNDN);
    Complex wm = pow(w1, m);
    res = Complex(m1fact) * wm + Complex(mfact / 2L) * wm * w1;
    // ratio ladder r_k = (2k+m-1)!/(2k)!: r_1 = (m+1)!/2
    Complex t = wm * w2;
    Real r(wp);
    mpfr_fac_ui(r.raw(), m + 1, MPFR_RNDN);
    r = r / 2L;
    Real prev_mag(0L, wp);
    for (int k = 1; k <= plan.terms; ++k) {
      Complex term = t * (bernoulli_2k(k, wp) * r);
      Real mag = abs(term);
      if (k > 2 && mag > prev_mag) break;
      res += term;
      if (mag < tol) break;
      prev_mag = mag;
      t = t * w2;
      // r_{k+1}/r_k = (2k+m)(2k+m+1)/((2k+1)(2k+2))
      r = r * Real((2L * k + m) * (2L * k + m + 1), wp) /
          Real((2L * k + 1) * (2L * k + 2), wp);
    }
    if (m % 2 == 0) res = -res;
  }
  res -= acc;
  return Complex(res.re.round_to(prec), res.im.round_to(prec));
}

}  // namespace

Complex digamma(const Complex& z, prec_t prec) {
  if (z.im.is_zero() && z.re.sign() > 0) {
    Real r(prec);
    mpfr_digamma(r.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(r, Real(prec));
  }
  return psi_like(0, z, prec);
}

Complex polygamma(int m, const Complex& z, prec_t prec) {
  if (m < 1 || m > 16)
    throw DomainError("polygamma: order must be in [1, 16]");
  return psi_like(m, z, prec);
}

std::vector<Complex> bell_complete(const std::vector<Complex>& g, prec_t prec) {
  size_t m = g.size();
  std::vector<Complex> B;
  B.reserve(m + 1);
  B.emplace_back(1L, prec);
  for (size_t r = 0; r < m; ++r) {
    // B_{r+1} = sum_{i=0}^{r} C(r, i) B_{r-i} g_{i+1}
    Complex acc(0L, prec);
    mpz_class binom = 1;
    for (size_t i = 0; i <= r; ++i) {
      acc += Real(binom, prec) * (B[r - i] * g[i]);
      binom = binom * (r - i) / (i + 1);
    }
    B.push_back(acc);
  }
  return B;
}

Complex gamma_deriv_ratio(int m, const Complex& z, prec_t prec) {
  if (m < 0 || m > 12) throw DomainError("gamma_deriv_ratio: m must be in [0, 12]");
  if (m == 0) return Complex(1L, prec);
  prec_t wp = prec + 32;
  std::vector<Complex> g;
  g.push_back(digamma(z, wp));
  for (int j = 1; j < m; ++j) g.push_back(polygamma(j, z, wp));
  return bell_complete(g, wp)[m];
}

Complex upper_incomplete_gamma(const Complex& s, const Real& x, prec_t prec) {
  if (x < 1L) throw DomainError("upper_incomplete_gamma: requires x >= 1");
  prec_t wp = prec + 32;
  // Gamma(s,x) = e^{-x} x^s / (x + 1 - s - 1(1-s)/(x + 3 - s - 2(2-s)/(...)))
  // Modified Lentz on b_i = x + 2i - 1 - s, a_i = -(i-1)(i-1-s).
  Complex sw(s.re.round_to(wp), s.im.round_to(wp));
  Real xw = x.round_to(wp);
  Real tiny = pow2(-(wp * 2), wp);
  Real eps = pow2(-(wp + 2), wp);
  auto safe = [&](Complex v) {
    if (abs(v) < tiny) return Complex(tiny, Real(wp));
    return v;
  };
  Complex b = Complex(xw + 1L) - sw;
  Complex f = safe(b), Cl = f, Dl(0L, wp);
  for (long i = 2; i <= 20000; ++i) {
    Complex a = Complex(Real(-(i - 1), wp)) * (Complex(Real(i - 1, wp)) - sw);
    b = Complex(xw + Real(2 * i - 1, wp)) - sw;
    Dl = safe(b + a * Dl);
    Dl = 1L / Dl;
    Cl = safe(b + a / Cl);
    Complex delta = Cl * Dl;
    f = f * delta;
    if (abs(delta - Complex(1L, wp)) < eps) {
      Complex g = exp(sw * Complex(log(xw)) - Complex(xw)) / f;
      return Complex(g.re.round_to(prec), g.im.round_to(prec));
    }
  }
  throw NonConvergence("upper_incomplete_gamma: continued fraction stalled");
}

Real gamma_ratio_abs_estimate(int k, const Real& delta, const Real& t0, int n,
                              prec_t prec) {
  if (k < 4) throw DomainError("gamma_ratio_abs_estimate: k >= 4");
  Real half_k(k, prec);
  half_k = half_k / 2L;
  Real mod2 = half_k * half_k + t0 * t0;
  // |k/2 + i t0|^{-2 n delta} = mod2^{-n delta}
  return pow(mod2, -Real(n, prec) * delta);
}

}  // namespace hmf::specialfn
