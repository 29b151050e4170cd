#pragma once

#include <vector>

#include "hmfkernel/quadrature.hpp"

namespace hmf::specialfn {

// Everything here evaluates, for f(s) = 1f1(s, k, i x) given by the Euler
// integral  int_0^1 e^{i x u} u^{s-1} (1-u)^{k-s-1} du  (Re s > 0,
// Re(k-s) > 0, x real), the s-derivatives d^nu/ds^nu f for nu = 0..ell.

// Power-series backend: 1f1 = sum_m Gamma(s+m) Gamma(k-s) / Gamma(k+m) (ix)^m / m!,
// with the coefficient ladder differentiated via polygamma ladders and
// complete Bell polynomials.  Accurate for |x| up to ~max(150, k) with the
// built-in precision boost that absorbs the oscillatory cancellation.
class KummerSeries {
 public:
  KummerSeries(const Complex& s, int k, int ell_max, prec_t prec,
               double x_abs_max, double abs_target);

  prec_t work_prec() const { return wp_; }

  // out[nu] = d^nu f at the given x (|x| <= x_abs_max).
  void eval(const Real& x, std::vector<Complex>& out) const;
  // Both signs at once (x > 0): out_p at +x, out_m at -x.
  void eval_pm(const Real& x, std::vector<Complex>& out_p,
               std::vector<Complex>& out_m) const;

 private:
  prec_t wp_;
  int ell_;
  double lg_target_;
  std::vector<std::vector<Complex>> c_;  // c_[m][nu]
  std::vector<double> lg_cmax_;          // log2 max_nu |c_[m][nu]|
};

// Large-|x| backend: endpoint expansions of the rotated-contour integrals
// (Watson's lemma at u = 0 and u = 1).  Requires |x| >= ~max(16, k); the
// returned err_bound is the certified truncation size (smallest term);
// callers must check it against their target and fall back if too large.
std::vector<Complex> kummer_watson(const Complex& s, int k, int ell_max,
                                   const Real& x, prec_t prec,
                                   const Real& abs_target, Real* err_bound);

// Tanh-sinh quadrature on (0,1); the contractual kummer_reg_deriv route.
std::vector<Complex> kummer_quad01(const Complex& s, int k, int ell_max,
                                   const Real& x, const QuadratureSpec& spec);

// Rotated-contour (exp-sinh) quadrature; reference backend for large |x|.
std::vector<Complex> kummer_rotated(const Complex& s, int k, int ell_max,
                                    const Real& x, const QuadratureSpec& spec);

// Spec operation: d^ell/ds^ell 1f1(s,k,ix) by tanh-sinh quadrature.
Complex kummer_reg_deriv(int ell, const Complex& s, int k, const Real& x,
                         const QuadratureSpec& spec);

// Dispatcher used by the kernel sums: series for small |x|, Watson beyond,
// rotated-contour quadrature if the Watson certificate misses the target.
std::vector<Complex> kummer_auto(const Complex& s, int k, int ell_max,
                                 const Real& x, prec_t prec,
                                 const Real& abs_target);

}  // namespace hmf::specialfn
