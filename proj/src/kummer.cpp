#include "hmfkernel/kummer.hpp"

#include <algorithm>
#include <cmath>

#include "hmfkernel/specialfn.hpp"

namespace hmf::specialfn {

namespace {

double lg_abs(const Complex& z) {
  // log2 |z| from the mpfr exponents; good enough for truncation decisions.
  double a = z.re.is_zero() ? -1e9
                            : (double)mpfr_get_exp(z.re.raw());
  double b = z.im.is_zero() ? -1e9
                            : (double)mpfr_get_exp(z.im.raw());
  return std::max(a, b);
}

// out[nu] += i^rot * c * f   (rot mod 4), with f real scratch factor.
void add_rotated(Complex& out, const Complex& c, const Real& f, int rot) {
  Complex t(c.re * f, c.im * f);
  switch (rot & 3) {
    case 0: out += t; break;
    case 1: out += Complex(-t.im, t.re); break;
    case 2: out -= t; break;
    case 3: out += Complex(t.im, -t.re); break;
  }
}

void check_domain(const Complex& s, int k) {
  if (!(s.re > 0L) || !(Real(k, 64) - s.re > 0L))
    throw DomainError("kummer: requires Re(s) > 0 and Re(k-s) > 0");
}

}  // namespace

KummerSeries::KummerSeries(const Complex& s, int k, int ell_max, prec_t prec,
                           double x_abs_max, double abs_target)
    : ell_(ell_max) {
  check_domain(s, k);
  // Oscillatory cancellation costs ~x*log2(e) bits.
  wp_ = prec + 64 + static_cast<prec_t>(1.5 * x_abs_max);
  lg_target_ = std::log2(std::max(abs_target, 1e-300)) - 8;

  Complex sw(s.re.round_to(wp_), s.im.round_to(wp_));
  Complex ks = Complex(Real(k, wp_)) - sw;

  // Term count estimate at x_abs_max from |x^m / m!| (c_0 <= 1 only helps).
  int mmax = 8;
  {
    double lx = std::log2(std::max(x_abs_max, 1e-9));
    double lg = 0;  // log2 of x^m/m!
    for (int m = 1; m < 100000; ++m) {
      lg += lx - std::log2((double)m);
      if (lg < lg_target_ - 4 && m > x_abs_max * 1.45) {
        mmax = m + 4;
        break;
      }
    }
  }

  // Coefficient ladder c_m = Gamma(s+m) Gamma(k-s) / (Gamma(k+m) m!), with
  // s-derivative columns via Bell polynomials over the polygamma ladders.
  Complex c0 = exp(log_gamma(sw, wp_) + log_gamma(ks, wp_) -
                   log_gamma(Complex(Real(k, wp_)), wp_));
  std::vector<Complex> psi_s;   // psi^{(r)}(s+m), r = 0..ell-1
  std::vector<Complex> psi_ks;  // psi^{(r)}(k-s), fixed
  if (ell_ > 0) {
    psi_s.push_back(digamma(sw, wp_));
    psi_ks.push_back(digamma(ks, wp_));
    for (int r = 1; r < ell_; ++r) {
      psi_s.push_back(polygamma(r, sw, wp_));
      psi_ks.push_back(polygamma(r, ks, wp_));
    }
  }
  c_.reserve(mmax + 1);
  lg_cmax_.reserve(mmax + 1);
  Complex cm = c0;
  Real mfac(1L, wp_);
  for (int m = 0; m <= mmax; ++m) {
    std::vector<Complex> row;
    row.reserve(ell_ + 1);
    Complex cfull = cm / mfac;
    row.push_back(cfull);
    if (ell_ > 0) {
      // phi^{(r)} for the log of Gamma(s+m)Gamma(k-s): see module notes.
      std::vector<Complex> g;
      for (int r = 1; r <= ell_; ++r) {
        Complex v = psi_s[r - 1];
        if (r % 2 == 0)
          v += psi_ks[r - 1];
        else
          v -= psi_ks[r - 1];
        g.push_back(v);
      }
      auto B = bell_complete(g, wp_);
      for (int nu = 1; nu <= ell_; ++nu) row.push_back(cfull * B[nu]);
    }
    double lg = -1e9;
    for (auto& z : row) lg = std::max(lg, lg_abs(z));
    lg_cmax_.push_back(lg);
    c_.push_back(std::move(row));
    if (m == mmax) break;
    // advance: c_{m+1} = c_m (s+m) / (k+m); separately track 1/m!.
    Complex sm = sw + Complex(Real(m, wp_));
    cm = cm * sm / Real(k + m, wp_);
    mfac = mfac * Real(m + 1, wp_);
    // polygamma ladder: psi^{(r)}(s+m+1) = psi^{(r)}(s+m) + (-1)^r r!/(s+m)^{r+1}
    if (ell_ > 0) {
      Complex inv = 1L / sm;
      Complex p = inv;
      Real rfac(1L, wp_);
      for (int r = 0; r < ell_; ++r) {
        if (r > 0) {
          p = p * inv;
          rfac = rfac * Real(r, wp_);
        }
        Complex upd = Complex(rfac) * p * inv;  // r!/(s+m)^{r+1}
        if (r % 2 == 0)
          psi_s[r] += upd;
        else
          psi_s[r] -= upd;
      }
    }
  }
}

void KummerSeries::eval(const Real& x, std::vector<Complex>& out) const {
  std::vector<Complex> op, om;
  bool negative = x.sign() < 0;
  eval_pm(abs(x), op, om);
  out = negative ? om : op;
}

void KummerSeries::eval_pm(const Real& x, std::vector<Complex>& out_p,
                           std::vector<Complex>& out_m) const {
  out_p.assign(ell_ + 1, Complex(0L, wp_));
  out_m.assign(ell_ + 1, Complex(0L, wp_));
  std::vector<Complex> even(ell_ + 1, Complex(0L, wp_));
  std::vector<Complex> odd(ell_ + 1, Complex(0L, wp_));
  Real xw = abs(x).round_to(wp_);
  double lx = xw.is_zero() ? -1e9 : std::log2(std::abs(xw.to_double()));
  Real xp(1L, wp_);
  int stale = 0;
  for (size_t m = 0; m < c_.size(); ++m) {
    auto& acc = (m & 1) ? odd : even;
    for (int nu = 0; nu <= ell_; ++nu)
      add_rotated(acc[nu], c_[m][nu], xp, static_cast<int>(m));
    if (lg_cmax_[m] + m * lx < lg_target_) {
      if (++stale >= 2) break;
    } else {
      stale = 0;
    }
    xp *= xw;
  }
  for (int nu = 0; nu <= ell_; ++nu) {
    out_p[nu] = even[nu] + odd[nu];
    out_m[nu] = even[nu] - odd[nu];
  }
}

namespace {

// One Watson endpoint series: sum_j (-1)^j C(alpha, j) Gamma(beta + j) pw^{-beta-j}
// with d^nu/ds^nu columns, where alpha and beta are linear in s with
// d(alpha)/ds = da (+1 or -1), d(beta)/ds = db, and pw = -i x (endpoint 0)
// or i x (endpoint 1).  Returns the smallest-term certificate in *cert.
//
// Term ladder: t_{j+1} = t_j * -(alpha - j)(beta + j) / ((j+1) pw); derivative
// columns via Bell over phi^{(r)}(s) of log t_j(s).
struct WatsonHalf {
  std::vector<Complex> sum;  // per nu
  double lg_cert = 1e9;      // log2 of smallest |term| reached (nu = 0)
};

WatsonHalf watson_half(const Complex& alpha, int da, const Complex& beta,
                       int db, const Complex& log_pw, int ell, prec_t wp,
                       double lg_target) {
  WatsonHalf H;
  H.sum.assign(ell + 1, Complex(0L, wp));

  // t_0 = Gamma(beta) exp(-beta log_pw)
  Complex lt0 = log_gamma(beta, wp) - beta * log_pw;
  Complex t = exp(lt0);

  // psi ladders at beta + j (up) and alpha - j (down).
  std::vector<Complex> psi_b, psi_a;
  if (ell > 0) {
    psi_b.push_back(digamma(beta, wp));
    psi_a.push_back(digamma(alpha + Complex(1L, wp), wp));  // psi(alpha - j + 1) at j = 0
    for (int r = 1; r < ell; ++r) {
      psi_b.push_back(polygamma(r, beta, wp));
      psi_a.push_back(polygamma(r, alpha + Complex(1L, wp), wp));
    }
  }
  // log t_j(s) = log Gamma(alpha+1) - log Gamma(alpha+1-j) - log Gamma(j+1)
  //            + log Gamma(beta+j) - (beta+j) log_pw   (the (-1)^j is kept
  // in the term value itself; its s-derivative vanishes).
  // phi^{(r)} = da^r [psi^{(r-1)}(alpha+1) - psi^{(r-1)}(alpha+1-j)]
  //            + db^r psi^{(r-1)}(beta+j) - [r == 1] db log_pw
  std::vector<Complex> psi_a_top = psi_a;  // fixed values at alpha + 1

  // Terms may grow before the asymptotic decay sets in (|x| below ~alpha^2);
  // track the single-hump shape: break on renewed growth only after the
  // decreasing phase has started.
  Complex pw = exp(log_pw);
  double lg_min = 1e9;
  double lg_prev = 1e9;
  bool decreasing = false;
  int grow = 0;
  const int jmax = 20000;
  for (int j = 0; j < jmax; ++j) {
    // derivative columns
    if (ell > 0) {
      std::vector<Complex> g;
      for (int r = 1; r <= ell; ++r) {
        Complex v = psi_a_top[r - 1] - psi_a[r - 1];
        if (da < 0 && r % 2 == 1) v = -v;  // da^r, da = +-1
        Complex w = psi_b[r - 1];
        if (db < 0 && r % 2 == 1) w = -w;
        v += w;
        if (r == 1) v -= (db < 0 ? -log_pw : log_pw);
        g.push_back(v);
      }
      auto B = bell_complete(g, wp);
      for (int nu = 0; nu <= ell; ++nu) H.sum[nu] += t * B[nu];
    } else {
      H.sum[0] += t;
    }
    double lt = lg_abs(t);
    if (lt < lg_prev) decreasing = true;
    lg_prev = lt;
    if (lt < lg_min) {
      lg_min = lt;
      grow = 0;
    } else if (decreasing && ++grow >= 3) {
      break;  // asymptotic tail exhausted
    }
    if (lt < lg_target) break;
    // advance term: t *= -(alpha - j)(beta + j) / ((j+1) pw)
    Complex aj = alpha - Complex(Real(j, wp));
    Complex bj = beta + Complex(Real(j, wp));
    t = t * aj * bj / (Real(j + 1, wp) * pw);
    t = -t;
    // psi ladders: beta + j -> beta + j + 1 (up); alpha+1-j -> alpha-j (down)
    if (ell > 0) {
      Complex invb = 1L / bj;
      Complex pb = invb;
      Complex am = alpha - Complex(Real(j, wp));  // alpha + 1 - (j+1)
      Complex inva = 1L / am;
      Complex pa = inva;
      Real rfac(1L, wp);
      for (int r = 0; r < ell; ++r) {
        if (r > 0) {
          pb = pb * invb;
          pa = pa * inva;
          rfac = rfac * Real(r, wp);
        }
        Complex updb = Complex(rfac) * pb * invb;
        Complex upda = Complex(rfac) * pa * inva;
        if (r % 2 == 0) {
          psi_b[r] += updb;
          psi_a[r] -= upda;
        } else {
          psi_b[r] -= updb;
          psi_a[r] += upda;
        }
      }
    }
  }
  H.lg_cert = lg_min;
  return H;
}

}  // namespace

std::vector<Complex> kummer_watson(const Complex& s, int k, int ell_max,
                                   const Real& x, prec_t prec,
                                   const Real& abs_target, Real* err_bound) {
  check_domain(s, k);
  double xd = x.to_double();
  double boost = std::min(1.5 * k, 1.5 * (k * (double)k / 4.0) / std::max(std::abs(xd), 1.0));
  prec_t wp = prec + 96 + static_cast<prec_t>(std::max(0.0, boost));
  double lg_target =
      abs_target.is_zero()
          ? -(double)prec
          : (double)mpfr_get_exp(abs_target.raw()) - 8;

  Complex sw(s.re.round_to(wp), s.im.round_to(wp));
  Complex ks = Complex(Real(k, wp)) - sw;
  Real ax = abs(x).round_to(wp);
  int sgn = x.sign();

  // log(-ix) and log(ix) for signed real x (principal branch).
  Real halfpi = const_pi(wp) / 2L;
  Complex log_mix(log(ax), sgn > 0 ? -halfpi : halfpi);
  Complex log_pix(log(ax), sgn > 0 ? halfpi : -halfpi);

  // Endpoint u = 0: alpha = k - s - 1, da = -1; beta = s, db = +1; pw = -ix.
  auto H0 = watson_half(ks - Complex(1L, wp), -1, sw, +1, log_mix, ell_max, wp,
                        lg_target);
  // Endpoint u = 1: alpha = s - 1, da = +1; beta = k - s, db = -1; pw = ix,
  // overall factor e^{ix}.
  auto H1 = watson_half(sw - Complex(1L, wp), +1, ks, -1, log_pix, ell_max, wp,
                        lg_target);

  Complex eix = cis((Real(sgn, wp) * ax));
  std::vector<Complex> out(ell_max + 1, Complex(0L, wp));
  for (int nu = 0; nu <= ell_max; ++nu) out[nu] = H0.sum[nu] + eix * H1.sum[nu];
  double cert = std::max(H0.lg_cert, H1.lg_cert);
  if (err_bound) {
    Real eb(1L, 64);
    mpfr_mul_2si(eb.raw(), eb.raw(), (long)std::ceil(cert) + 4, MPFR_RNDN);
    *err_bound = eb;
  }
  return out;
}

std::vector<Complex> kummer_quad01(const Complex& s, int k, int ell_max,
                                   const Real& x, const QuadratureSpec& spec) {
  check_domain(s, k);
  prec_t wp = spec.work_prec;
  Complex sw(s.re.round_to(wp), s.im.round_to(wp));
  Real xw = x.round_to(wp);
  Real pi = const_pi(wp);
  Complex km_s = Complex(Real(k, wp)) - sw;

  auto integrand = [&](const Real& t, std::vector<Complex>& out) {
    // u = 1/(1 + e^{-pi sinh t}); log(u/(1-u)) = pi sinh t.
    Real e = pi * sinh(t);
    Real logu = -log1p(exp(-e));
    Real log1mu = -log1p(exp(e));
    Real u = exp(logu);
    // pi cosh t * u^s (1-u)^{k-s} e^{i x u}
    Complex expo = sw * Complex(logu) + km_s * Complex(log1mu);
    expo.im += xw * u;
    Complex base = exp(expo) * (pi * cosh(t));
    out[0] = base;
    for (int nu = 1; nu <= ell_max; ++nu) {
      base = base * Complex(e);
      out[nu] = base;
    }
  };
  return de_trapezoid(integrand, ell_max + 1, spec, nullptr);
}

std::vector<Complex> kummer_rotated(const Complex& s, int k, int ell_max,
                                    const Real& x, const QuadratureSpec& spec) {
  check_domain(s, k);
  if (x.is_zero()) return kummer_quad01(s, k, ell_max, x, spec);
  prec_t wp = spec.work_prec;
  Complex sw(s.re.round_to(wp), s.im.round_to(wp));
  Complex ks = Complex(Real(k, wp)) - sw;
  Real ax = abs(x).round_to(wp);
  int sgn = x.sign();
  Real pi = const_pi(wp);
  Real halfpi = pi / 2L;
  Complex eix = cis(Real(sgn, wp) * ax);

  // Path A (from u=0): i sgn int_0^infty e^{-|x| w} (i sgn w)^{s-1} (1 - i sgn w)^{k-s-1} dw
  // Path B (from u=1): -i sgn e^{ix} int_0^infty e^{-|x| w} (1 + i sgn w)^{s-1} (-i sgn w)^{k-s-1} dw
  // exp-sinh substitution w = exp((pi/2) sinh t), dw = (pi/2) cosh t w dt.
  auto integrand = [&](const Real& t, std::vector<Complex>& out) {
    Real w = exp(halfpi * sinh(t));
    Real jac = halfpi * cosh(t) * w;
    Real lw = halfpi * sinh(t);
    Real at = atan(w);
    Real l1pw2 = log1p(w * w) / 2L;
    Real sg(sgn, wp);

    // log(i sgn w) = lw + i sgn pi/2 ; log(1 -+ i sgn w) = l1pw2 -+ i sgn atan(w)
    Complex log_u_A(lw, sg * halfpi);
    Complex log_1mu_A(l1pw2, -(sg * at));
    Complex log_u_B(l1pw2, sg * at);
    Complex log_1mu_B(lw, -(sg * halfpi));

    Complex eA = (sw - Complex(1L, wp)) * log_u_A +
                 (ks - Complex(1L, wp)) * log_1mu_A;
    eA.re -= ax * w;
    Complex eB = (sw - Complex(1L, wp)) * log_u_B +
                 (ks - Complex(1L, wp)) * log_1mu_B;
    eB.re -= ax * w;

    Complex baseA = mul_i(exp(eA) * jac) * sgn;
    Complex baseB = mul_i(eix * exp(eB) * jac) * (-sgn);
    Complex lfA = log_u_A - log_1mu_A;
    Complex lfB = log_u_B - log_1mu_B;
    Complex pA = baseA, pB = baseB;
    out[0] = pA + pB;
    for (int nu = 1; nu <= ell_max; ++nu) {
      pA = pA * lfA;
      pB = pB * lfB;
      out[nu] = pA + pB;
    }
  };
  return de_trapezoid(integrand, ell_max + 1, spec, nullptr);
}

Complex kummer_reg_deriv(int ell, const Complex& s, int k, const Real& x,
                         const QuadratureSpec& spec) {
  if (ell < 0 || ell > 8) throw DomainError("kummer_reg_deriv: ell in [0, 8]");
  return kummer_quad01(s, k, ell, x, spec)[ell];
}

std::vector<Complex> kummer_auto(const Complex& s, int k, int ell_max,
                                 const Real& x, prec_t prec,
                                 const Real& abs_target) {
  double ax = std::abs(x.to_double());
  double series_limit = std::max(150.0, 1.05 * k);
  if (ax <= series_limit) {
    KummerSeries ser(s, k, ell_max, prec, ax, abs_target.to_double());
    std::vector<Complex> out;
    ser.eval(x, out);
    return out;
  }
  Real cert(64);
  auto out = kummer_watson(s, k, ell_max, x, prec, abs_target, &cert);
  if (cert < abs_target) return out;
  QuadratureSpec spec;
  spec.work_prec = prec + 64;
  spec.target = abs_target;
  return kummer_rotated(s, k, ell_max, x, spec);
}

}  // namespace hmf::specialfn
