#pragma once

#include <functional>
#include <vector>

#include "hmfkernel/complexnum.hpp"
#include "hmfkernel/errors.hpp"

namespace hmf::specialfn {

// Double-exponential quadrature control.  `target` is the absolute error at
// which two successive node-doubling levels must agree.
struct QuadratureSpec {
  int max_level = 14;
  Real target = Real("1e-36", 64);
  prec_t work_prec = 320;
};

// Trapezoid sum over the real line with node doubling, for integrands that
// decay double-exponentially after a tanh-sinh / exp-sinh substitution
// (the callback applies the substitution and includes its Jacobian).
// The callback fills `out` with the component values at node t; components
// are accumulated independently and all must pass the level-agreement test.
// Returns the achieved level delta in *achieved if non-null.
std::vector<Complex> de_trapezoid(
    const std::function<void(const Real& t, std::vector<Complex>& out)>& f,
    int ncomp, const QuadratureSpec& spec, Real* achieved = nullptr);

}  // namespace hmf::specialfn
