#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hmfkernel/errors.hpp"
#include "hmfkernel/real.hpp"

namespace hmf::numberfield {

// Element of O_F in integral-basis coordinates: x + y*omega (y = 0 over Q).
struct AlgebraicInt {
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const AlgebraicInt&, const AlgebraicInt&) = default;
  friend bool operator!=(const AlgebraicInt&, const AlgebraicInt&) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

// A totally real field of narrow class number 1: Q or a real quadratic
// field Q(sqrt d) with d in {2, 5, 13, 17} (class number 1, N(eps0) = -1).
struct FieldDescriptor {
  std::string name;      // "q", "sqrt2", ...
  int degree = 1;        // n
  long d = 0;            // square-free parameter (0 for Q)
  long disc = 1;         // d_F
  bool omega_half = false;  // omega = (1+sqrt d)/2 if d = 1 mod 4, else sqrt d
  long omega_trace = 0;     // tr(omega)
  long omega_norm = 0;      // N(omega)
  AlgebraicInt delta_f{1, 0};  // totally positive generator of the different
  AlgebraicInt eps0{1, 0};     // fundamental unit
  long eps0_norm = 1;
  AlgebraicInt eps_t{1, 0};    // totally positive fundamental unit (eps0^2)
  AlgebraicInt eps_t_inv{1, 0};
  int unit_index = 2;          // [O^x : O^{x+}]
  // Empirical Trotabas window constants, filled by verify::check_trotabas.
  double c1_empirical = 0;
  double c2_empirical = 0;
};

FieldDescriptor make_field(const std::string& selector);

AlgebraicInt add(const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt sub(const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt neg(const AlgebraicInt& a);
AlgebraicInt mul(const FieldDescriptor& F, const AlgebraicInt& a,
                 const AlgebraicInt& b);
AlgebraicInt conj(const FieldDescriptor& F, const AlgebraicInt& a);
AlgebraicInt unit_pow(const FieldDescriptor& F, long m);  // eps_t^m

int64_t norm(const FieldDescriptor& F, const AlgebraicInt& a);
int64_t trace(const FieldDescriptor& F, const AlgebraicInt& a);
mpz_class norm_z(const FieldDescriptor& F, const AlgebraicInt& a);

std::vector<Real> embeddings(const FieldDescriptor& F, const AlgebraicInt& a,
                             prec_t prec);

// Exact sign of sigma_j(a), decided with integer arithmetic only.
int embedding_sign(const FieldDescriptor& F, const AlgebraicInt& a, int j);
bool is_totally_positive(const FieldDescriptor& F, const AlgebraicInt& a);

struct UnitReduction {
  long m = 0;           // xi' = eps_t^m * xi
  AlgebraicInt reduced;
};

// Canonical associate of xi under the totally positive units: the unique
// eps_t^m xi with log|sigma_1| - log|sigma_2| in [-log eps_t, log eps_t).
// Exact integer window tests; identity for degree 1.
UnitReduction reduce_by_units(const FieldDescriptor& F, const AlgebraicInt& xi);
bool is_canonical(const FieldDescriptor& F, const AlgebraicInt& xi);

// Same reduction against the shifted window [0, 2 log eps_t); used by the
// representative-independence checks.
UnitReduction reduce_by_units_alt(const FieldDescriptor& F,
                                  const AlgebraicInt& xi);

// One canonical representative of every nonzero O_F^{x+}-orbit with
// 0 < |N| <= bound, ordered by (|N|, x, y).
std::vector<AlgebraicInt> enumerate_reps(const FieldDescriptor& F,
                                         int64_t bound);
std::vector<AlgebraicInt> enumerate_reps_alt(const FieldDescriptor& F,
                                             int64_t bound);

// (a) + (c) = O_F, decided by the Hermite-normal-form index of the integer
// lattice spanned by {a, omega a, c, omega c}.
bool is_coprime(const FieldDescriptor& F, const AlgebraicInt& a,
                const AlgebraicInt& c);

// d0 with a*d0 = 1 mod (c), reduced to the canonical HNF box of O_F/(c).
AlgebraicInt inverse_mod(const FieldDescriptor& F, const AlgebraicInt& a,
                         const AlgebraicInt& c);

// Exact rational tr(num * d0 / (delta_F * eta * c)) used by the additive
// character; num and d0 are elements, eta a unit power, the division is in F.
mpq_class character_exponent(const FieldDescriptor& F, const AlgebraicInt& num,
                             const AlgebraicInt& d0, const AlgebraicInt& eta_c);

}  // namespace hmf::numberfield
