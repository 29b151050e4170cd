#include "hmfkernel/quadrature.hpp"

#include <cmath>

namespace hmf::specialfn {

std::vector<Complex> de_trapezoid(
    const std::function<void(const Real& t, std::vector<Complex>& out)>& f,
    int ncomp, const QuadratureSpec& spec, Real* achieved) {
  prec_t wp = spec.work_prec;
  Real cutoff = spec.target * pow2(-12, wp);

  std::vector<Complex> integral(ncomp, Complex(0L, wp));
  std::vector<Complex> vals(ncomp, Complex(0L, wp));
  bool have_prev = false;

  auto node_small = [&](const std::vector<Complex>& v) {
    for (const auto& z : v)
      if (!(abs(z) < cutoff)) return false;
    return true;
  };

  for (int level = 0; level <= spec.max_level; ++level) {
    Real h = pow2(-level, wp);
    double hd = std::ldexp(1.0, -level);
    std::vector<Complex> part(ncomp, Complex(0L, wp));
    long start = level == 0 ? 0 : 1;
    long step = level == 0 ? 1 : 2;  // only new (odd) nodes on refinements
    for (int dir = 0; dir < 2; ++dir) {
      int small_run = 0;
      long j = dir == 0 ? start : -(start == 0 ? 1 : start);
      long dstep = dir == 0 ? step : -step;
      for (;; j += dstep) {
        Real t = Real(j, wp) * h;
        f(t, vals);
        for (int c = 0; c < ncomp; ++c) part[c] += vals[c];
        if (node_small(vals)) {
          if (++small_run >= 3 && std::abs(j * hd) > 3.0) break;
        } else {
          small_run = 0;
        }
        if (std::abs(j) > (1L << 22))
          throw QuadratureNonConvergence("node walk did not terminate");
      }
    }
    std::vector<Complex> next(ncomp, Complex(0L, wp));
    if (level == 0) {
      for (int c = 0; c < ncomp; ++c) next[c] = part[c];
    } else {
      for (int c = 0; c < ncomp; ++c) next[c] = integral[c] / 2L + h * part[c];
    }
    if (have_prev) {
      Real worst(0L, wp);
      for (int c = 0; c < ncomp; ++c) {
        Real d = abs(next[c] - integral[c]);
        if (d > worst) worst = d;
      }
      if (worst < spec.target && level >= 3) {
        if (achieved) *achieved = worst;
        return next;
      }
    }
    integral = next;
    have_prev = true;
  }
  throw QuadratureNonConvergence("quadrature levels did not stabilize");
}

}  // namespace hmf::specialfn
