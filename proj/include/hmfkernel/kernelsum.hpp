#pragma once

#include <optional>
#include <utility>

#include "hmfkernel/complexnum.hpp"
#include "hmfkernel/numberfield.hpp"

namespace hmf::kernelsum {

namespace nf = hmf::numberfield;

// Branch convention for the powers N(c)^{s-k} N(a)^{-s} of possibly negative
// embeddings in the (a, c)-sum.  The paper's display is ambiguous here;
// the dimension-zero oracle selects RB (see DESIGN notes in the README):
//   RB: |.|-powers with the ratio phase e^{i pi s sgn(a_j c_j)/2} per
//       embedding (reduces to the paper's i^{ns} when all a_j c_j > 0),
//   PB: per-embedding principal powers of a_j and c_j times i^{ns},
//   AV: absolute values times i^{ns}.
enum class Branch { RB, PB, AV };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::RB: return "RB";
    case Branch::PB: return "PB";
    default: return "AV";
  }
}
Branch branch_from_name(const std::string& s);

// The evaluation point s = k/2 - delta + i t0 at a given working precision.
// The library accepts any point with 1 < Re(s) < k-1 (kernel convergence);
// the CLI additionally restricts delta to (0, 1/2) per the eval contract.
struct EvalPoint {
  int k = 12;
  int ell = 0;
  Real delta = Real("0.3", 256);
  Real t0 = Real(256);
  prec_t prec = 256;

  Complex s() const {
    Real re = Real(k, prec) / 2L - delta.round_to(prec);
    return Complex(re, t0.round_to(prec));
  }
  // Validates 1 < Re(s) < k - 1, ell in [0, 8], k even >= 4.
  void validate() const;
  // Additionally requires delta in (0, 1/2).
  void validate_strict() const;
};

struct TruncationParams {
  int64_t a_max = 40;
  int64_t c_max = 40;
  int m_units = 8;
  Real quad_target = Real("1e-36", 64);
  // When set (> 0), e_sums throws TruncationTooSmall if the tail estimate
  // exceeds it.
  Real tail_target = Real(0L, 64);
  bool alt_window = false;  // alternate orbit-representative convention
  int parallel = 1;
};

struct TermBreakdown {
  Complex i1n, i2n, i3n;   // normalized terms
  Complex e1, e2;
  Complex total;           // T = I1n + I2n + I3n
  Complex average;         // A = sum_f Lambda^(ell)(f, s)/<f,f>
  Complex p_model;         // (n log 2pi - n psi(k-s))^ell
  Real tail_bound;         // truncation bound propagated to `average`
  Real e_tail_bound;       // raw bound on the discarded E-sum tail
};

Complex i1_normalized(const nf::FieldDescriptor& F, const EvalPoint& p);
Complex i2_normalized(const nf::FieldDescriptor& F, const EvalPoint& p);

// E_{1,ell} and E_{2,ell}: the unit/orbit triple sums with the exact
// ell-th Leibniz expansion of the (a, c) term.  `scale` multiplies the
// 1f1 arguments and the character (the nu of r_coeff); nullptr means nu = 1.
std::pair<Complex, Complex> e_sums(const nf::FieldDescriptor& F,
                                   const EvalPoint& p,
                                   const TruncationParams& tr, Branch branch,
                                   const nf::AlgebraicInt* scale = nullptr);

Complex i3_normalized(const nf::FieldDescriptor& F, const EvalPoint& p,
                      const TruncationParams& tr, Branch branch);

TermBreakdown total(const nf::FieldDescriptor& F, const EvalPoint& p,
                    const TruncationParams& tr, Branch branch);

// Fourier coefficient r_{s,k}(nu) of the kernel, nu = xi / delta_F >> 0,
// ell = 0 only.
Complex r_coeff(const nf::FieldDescriptor& F, const nf::AlgebraicInt& xi,
                const EvalPoint& p, const TruncationParams& tr, Branch branch);

// Upper bound for the E-sum tail discarded beyond the truncation parameters.
Real tail_estimate(const nf::FieldDescriptor& F, const EvalPoint& p,
                   const TruncationParams& tr);

// |pref * renorm|: converts an E-tail bound into a bound on `average`.
Real average_scale_factor(const nf::FieldDescriptor& F, const EvalPoint& p);

}  // namespace hmf::kernelsum
