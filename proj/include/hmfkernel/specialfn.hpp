#pragma once

#include <vector>

#include "hmfkernel/complexnum.hpp"
#include "hmfkernel/errors.hpp"

namespace hmf::specialfn {

// B_{2k} at the given precision (zeta route, cached).
Real bernoulli_2k(int k, prec_t prec);

// log Gamma, continuous along the shift path (gamma = exp(log_gamma) is
// exactly the principal Gamma).  Argument-shift recursion into the Stirling
// zone, Bernoulli series with self-tuned radius and term count.
Complex log_gamma(const Complex& z, prec_t prec);
Complex gamma(const Complex& z, prec_t prec);

Complex digamma(const Complex& z, prec_t prec);
// m-th polygamma, 1 <= m <= 16.
Complex polygamma(int m, const Complex& z, prec_t prec);

// Complete Bell polynomial B_m(g[0], ..., g[m-1]) by the binomial recurrence;
// returns all of B_0..B_m.
std::vector<Complex> bell_complete(const std::vector<Complex>& g, prec_t prec);

// Gamma^(m)(z) / Gamma(z) = B_m(psi(z), psi'(z), ..., psi^{(m-1)}(z)), m <= 12.
Complex gamma_deriv_ratio(int m, const Complex& z, prec_t prec);

// Upper incomplete gamma for x >= 1 (Legendre continued fraction, modified
// Lentz).
Complex upper_incomplete_gamma(const Complex& s, const Real& x, prec_t prec);

// Model |Gamma^n(s)/Gamma^n(k-s)| ~ |k/2 + i t0|^{-2 n delta}.
Real gamma_ratio_abs_estimate(int k, const Real& delta, const Real& t0, int n,
                              prec_t prec);

}  // namespace hmf::specialfn
