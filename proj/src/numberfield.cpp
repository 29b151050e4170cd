#include "hmfkernel/numberfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace hmf::numberfield {

namespace {

using i128 = __int128;

int64_t checked_i64(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw NumericError(std::string("integer overflow in ") + what);
  return static_cast<int64_t>(v);
}

// Integer square root (floor).
int64_t isqrt(int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(int64_t n, int64_t* root) {
  if (n < 0) return false;
  int64_t r = isqrt(n);
  if (r * r == n) {
    *root = r;
    return true;
  }
  return false;
}

// Sign of u + v*sqrt(d), exact.
int sign_quad(const mpz_class& u, const mpz_class& v, long d) {
  int su = sgn(u), sv = sgn(v);
  if (su >= 0 && sv >= 0) return (su || sv) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  mpz_class uu = u * u, vv = v * v * d;
  int c = cmp(uu, vv);
  if (c == 0) return 0;
  // u > 0 > v: positive iff u^2 > v^2 d; the mirrored case flips.
  return (su > 0) == (c > 0) ? 1 : -1;
}

// (u, v) with sigma(a) = (u + v sqrt d)/2.
void uv_rep(const FieldDescriptor& F, const AlgebraicInt& a, mpz_class* u,
            mpz_class* v) {
  if (F.omega_half) {
    *u = 2 * mpz_class(a.x) + a.y;
    *v = a.y;
  } else {
    *u = 2 * mpz_class(a.x);
    *v = 2 * mpz_class(a.y);
  }
}

// Exact sign of sigma_1(a) - sigma_2(b).
int cmp_sigma1_sigma2(const FieldDescriptor& F, const AlgebraicInt& a,
                      const AlgebraicInt& b) {
  mpz_class ua, va, ub, vb;
  uv_rep(F, a, &ua, &va);
  uv_rep(F, b, &ub, &vb);
  return sign_quad(ua - ub, va + vb, F.d);
}

// Fundamental Pell solution of x^2 - d y^2 = +-1 from the continued
// fraction of sqrt(d).
void pell_unit(long d, int64_t* px, int64_t* py) {
  int64_t a0 = isqrt(d);
  int64_t P = 0, Q = 1, a = a0;
  int64_t pm1 = 1, p0 = a0, qm1 = 0, q0 = 1;
  for (int it = 0; it < 256; ++it) {
    i128 n = static_cast<i128>(p0) * p0 - static_cast<i128>(d) * q0 * q0;
    if (n == 1 || n == -1) {
      *px = p0;
      *py = q0;
      return;
    }
    P = a * Q - P;
    Q = (d - P * P) / Q;
    a = (a0 + P) / Q;
    int64_t p1 = checked_i64(static_cast<i128>(a) * p0 + pm1, "pell");
    int64_t q1 = checked_i64(static_cast<i128>(a) * q0 + qm1, "pell");
    pm1 = p0; p0 = p1;
    qm1 = q0; q0 = q1;
  }
  throw NumericError("continued fraction of sqrt(d) did not close");
}

}  // namespace

AlgebraicInt add(const AlgebraicInt& a, const AlgebraicInt& b) {
  return {a.x + b.x, a.y + b.y};
}
AlgebraicInt sub(const AlgebraicInt& a, const AlgebraicInt& b) {
  return {a.x - b.x, a.y - b.y};
}
AlgebraicInt neg(const AlgebraicInt& a) { return {-a.x, -a.y}; }

AlgebraicInt mul(const FieldDescriptor& F, const AlgebraicInt& a,
                 const AlgebraicInt& b) {
  // (x1 + y1 w)(x2 + y2 w) with w^2 = t w - n0.
  i128 yy = static_cast<i128>(a.y) * b.y;
  i128 x = static_cast<i128>(a.x) * b.x - F.omega_norm * yy;
  i128 y = static_cast<i128>(a.x) * b.y + static_cast<i128>(a.y) * b.x +
           F.omega_trace * yy;
  return {checked_i64(x, "mul"), checked_i64(y, "mul")};
}

AlgebraicInt conj(const FieldDescriptor& F, const AlgebraicInt& a) {
  return {checked_i64(static_cast<i128>(a.x) + F.omega_trace * static_cast<i128>(a.y), "conj"),
          -a.y};
}

AlgebraicInt unit_pow(const FieldDescriptor& F, long m) {
  AlgebraicInt base = m >= 0 ? F.eps_t : F.eps_t_inv;
  unsigned long e = m >= 0 ? m : -static_cast<unsigned long>(m);
  AlgebraicInt acc{1, 0};
  while (e) {
    if (e & 1) acc = mul(F, acc, base);
    base = mul(F, base, base);
    e >>= 1;
  }
  return acc;
}

mpz_class norm_z(const FieldDescriptor& F, const AlgebraicInt& a) {
  if (F.degree == 1) return mpz_class(a.x);
  mpz_class x(a.x), y(a.y);
  return x * x + F.omega_trace * x * y + F.omega_norm * y * y;
}

int64_t norm(const FieldDescriptor& F, const AlgebraicInt& a) {
  if (F.degree == 1) return a.x;
  i128 n = static_cast<i128>(a.x) * a.x +
           static_cast<i128>(F.omega_trace) * a.x * a.y +
           static_cast<i128>(F.omega_norm) * a.y * a.y;
  return checked_i64(n, "norm");
}

int64_t trace(const FieldDescriptor& F, const AlgebraicInt& a) {
  if (F.degree == 1) return a.x;
  return checked_i64(2 * static_cast<i128>(a.x) +
                     F.omega_trace * static_cast<i128>(a.y), "trace");
}

std::vector<Real> embeddings(const FieldDescriptor& F, const AlgebraicInt& a,
                             prec_t prec) {
  if (F.degree == 1) return {Real(static_cast<long>(a.x), prec)};
  Real rd = sqrt(Real(F.d, prec + 8));
  Real w1 = F.omega_half ? (1 + rd) / 2L : rd;
  Real w2 = F.omega_half ? (1 - rd) / 2L : -rd;
  Real x(static_cast<long>(a.x), prec), y(static_cast<long>(a.y), prec);
  return {(x + y * w1).round_to(prec), (x + y * w2).round_to(prec)};
}

int embedding_sign(const FieldDescriptor& F, const AlgebraicInt& a, int j) {
  if (F.degree == 1) return a.x > 0 ? 1 : a.x < 0 ? -1 : 0;
  mpz_class u, v;
  uv_rep(F, a, &u, &v);
  return j == 0 ? sign_quad(u, v, F.d) : sign_quad(u, -v, F.d);
}

bool is_totally_positive(const FieldDescriptor& F, const AlgebraicInt& a) {
  for (int j = 0; j < F.degree; ++j)
    if (embedding_sign(F, a, j) <= 0) return false;
  return true;
}

namespace {

// Window tests.  Lower edge: |sigma1/sigma2| >= 1/eps_t, i.e.
// sigma1(eps_t^2 xi^2) >= sigma1(conj(xi)^2); upper edge strict.
bool window_lower_ok(const FieldDescriptor& F, const AlgebraicInt& xi) {
  AlgebraicInt xi2 = mul(F, xi, xi);
  AlgebraicInt lhs = mul(F, mul(F, F.eps_t, F.eps_t), xi2);
  AlgebraicInt rhs = mul(F, conj(F, xi), conj(F, xi));
  return cmp_sigma1_sigma2(F, lhs, rhs) >= 0;
}
bool window_upper_ok(const FieldDescriptor& F, const AlgebraicInt& xi) {
  AlgebraicInt xi2 = mul(F, xi, xi);
  AlgebraicInt lhs = mul(F, mul(F, F.eps_t, F.eps_t),
                         mul(F, conj(F, xi), conj(F, xi)));
  return cmp_sigma1_sigma2(F, lhs, xi2) > 0;
}

// Alternate window [0, 2 log eps_t): |sigma1/sigma2| in [1, eps_t^2).
bool alt_lower_ok(const FieldDescriptor& F, const AlgebraicInt& xi) {
  AlgebraicInt xi2 = mul(F, xi, xi);
  AlgebraicInt rhs = mul(F, conj(F, xi), conj(F, xi));
  return cmp_sigma1_sigma2(F, xi2, rhs) >= 0;
}
bool alt_upper_ok(const FieldDescriptor& F, const AlgebraicInt& xi) {
  AlgebraicInt e4 = mul(F, mul(F, F.eps_t, F.eps_t), mul(F, F.eps_t, F.eps_t));
  AlgebraicInt lhs = mul(F, e4, mul(F, conj(F, xi), conj(F, xi)));
  return cmp_sigma1_sigma2(F, lhs, mul(F, xi, xi)) > 0;
}

UnitReduction reduce_generic(const FieldDescriptor& F, const AlgebraicInt& xi,
                             bool (*lower)(const FieldDescriptor&, const AlgebraicInt&),
                             bool (*upper)(const FieldDescriptor&, const AlgebraicInt&)) {
  if (xi.is_zero()) throw ZeroElement("reduce_by_units: zero element");
  if (F.degree == 1) return {0, xi};

  // Float estimate of the balancing power, then exact fix-up.
  double s1 = std::abs(static_cast<double>(xi.x) +
                       static_cast<double>(xi.y) *
                           (F.omega_half ? (1 + std::sqrt((double)F.d)) / 2
                                         : std::sqrt((double)F.d)));
  double s2 = std::abs(static_cast<double>(xi.x) +
                       static_cast<double>(xi.y) *
                           (F.omega_half ? (1 - std::sqrt((double)F.d)) / 2
                                         : -std::sqrt((double)F.d)));
  double let = std::log(static_cast<double>(F.eps_t.x) +
                        static_cast<double>(F.eps_t.y) *
                            (F.omega_half ? (1 + std::sqrt((double)F.d)) / 2
                                          : std::sqrt((double)F.d)));
  long m = 0;
  if (s1 > 0 && s2 > 0)
    m = std::lround((std::log(s2) - std::log(s1)) / (2 * let));
  AlgebraicInt cur = mul(F, unit_pow(F, m), xi);
  while (!lower(F, cur)) {
    cur = mul(F, F.eps_t, cur);
    ++m;
  }
  while (!upper(F, cur)) {
    cur = mul(F, F.eps_t_inv, cur);
    --m;
  }
  // Both edges hold now: moving down from a lower-edge failure always lands
  // inside, since the window has exactly the width of one unit step.
  return {m, cur};
}

}  // namespace

UnitReduction reduce_by_units(const FieldDescriptor& F, const AlgebraicInt& xi) {
  return reduce_generic(F, xi, &window_lower_ok, &window_upper_ok);
}

UnitReduction reduce_by_units_alt(const FieldDescriptor& F,
                                  const AlgebraicInt& xi) {
  return reduce_generic(F, xi, &alt_lower_ok, &alt_upper_ok);
}

bool is_canonical(const FieldDescriptor& F, const AlgebraicInt& xi) {
  if (F.degree == 1) return !xi.is_zero();
  return window_lower_ok(F, xi) && window_upper_ok(F, xi);
}

namespace {

std::vector<AlgebraicInt> enumerate_generic(const FieldDescriptor& F,
                                            int64_t bound, bool alt) {
  std::vector<AlgebraicInt> out;
  if (F.degree == 1) {
    for (int64_t v = 1; v <= bound; ++v) {
      out.push_back({-v, 0});
      out.push_back({v, 0});
    }
  } else {
    // Canonical representatives satisfy |sigma_j| <= W sqrt(|N|) with
    // W = eps_t^{1/2} (standard window) or eps_t (alternate window).
    double rd = std::sqrt(static_cast<double>(F.d));
    double w1 = F.omega_half ? (1 + rd) / 2 : rd;
    double w2 = F.omega_half ? (1 - rd) / 2 : -rd;
    double et = static_cast<double>(F.eps_t.x) + static_cast<double>(F.eps_t.y) * w1;
    double wfac = alt ? et : std::sqrt(et);
    double C = wfac * std::sqrt(static_cast<double>(bound)) * (1 + 1e-9) + 1e-9;
    auto ymax = static_cast<int64_t>(2 * C / (w1 - w2)) + 1;
    for (int64_t y = -ymax; y <= ymax; ++y) {
      double lo = std::max(-C - y * w1, -C - y * w2);
      double hi = std::min(C - y * w1, C - y * w2);
      for (auto x = static_cast<int64_t>(std::floor(lo)) - 1;
           x <= static_cast<int64_t>(std::ceil(hi)) + 1; ++x) {
        AlgebraicInt a{x, y};
        if (a.is_zero()) continue;
        int64_t n = norm(F, a);
        if (n == 0 || std::abs(n) > bound) continue;
        bool ok = alt ? (alt_lower_ok(F, a) && alt_upper_ok(F, a))
                      : is_canonical(F, a);
        if (ok) out.push_back(a);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&F](const AlgebraicInt& a, const AlgebraicInt& b) {
              auto na = std::abs(norm(F, a)), nb = std::abs(norm(F, b));
              if (na != nb) return na < nb;
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });
  return out;
}

}  // namespace

std::vector<AlgebraicInt> enumerate_reps(const FieldDescriptor& F,
                                         int64_t bound) {
  return enumerate_generic(F, bound, false);
}
std::vector<AlgebraicInt> enumerate_reps_alt(const FieldDescriptor& F,
                                             int64_t bound) {
  return enumerate_generic(F, bound, true);
}

namespace {

// Row HNF of the lattice spanned by the given Z^2 rows; returns the index
// (product of pivots) and, optionally, the lower-triangular basis
// [[p, 0], [q, r]] with p, r > 0 and 0 <= q < p... (basis rows (p,0),(q,r)).
mpz_class row_lattice_index(std::vector<std::array<mpz_class, 2>> rows,
                            std::array<mpz_class, 2>* b1 = nullptr,
                            std::array<mpz_class, 2>* b2 = nullptr) {
  // Euclid on the second coordinate across rows, leaving one row with
  // nonzero second coordinate.
  size_t n = rows.size();
  for (;;) {
    size_t piv = n;
    for (size_t i = 0; i < n; ++i)
      if (rows[i][1] != 0 && (piv == n || abs(rows[i][1]) < abs(rows[piv][1])))
        piv = i;
    if (piv == n) break;
    bool done = true;
    for (size_t i = 0; i < n; ++i) {
      if (i == piv || rows[i][1] == 0) continue;
      mpz_class q = rows[i][1] / rows[piv][1];  // truncated division is fine
      rows[i][0] -= q * rows[piv][0];
      rows[i][1] -= q * rows[piv][1];
      if (rows[i][1] != 0) done = false;
    }
    if (done) {
      std::swap(rows[piv], rows[n - 1]);
      break;
    }
  }
  // gcd of first coordinates of the remaining rows.
  mpz_class p = 0;
  for (size_t i = 0; i + 1 < n; ++i) mpz_gcd(p.get_mpz_t(), p.get_mpz_t(), rows[i][0].get_mpz_t());
  mpz_class q = rows[n - 1][0], r = abs(rows[n - 1][1]);
  if (r == 0) return 0;  // rank-deficient: not a finite-index sublattice
  if (p == 0) return 0;
  if (rows[n - 1][1] < 0) q = -q;
  q %= p;
  if (q < 0) q += p;
  if (b1) *b1 = {p, 0};
  if (b2) *b2 = {q, r};
  return p * r;
}

}  // namespace

bool is_coprime(const FieldDescriptor& F, const AlgebraicInt& a,
                const AlgebraicInt& c) {
  if (a.is_zero() || c.is_zero()) throw ZeroElement("is_coprime: zero element");
  if (F.degree == 1) return std::gcd(a.x, c.x) == 1;
  AlgebraicInt omega{0, 1};
  AlgebraicInt wa = mul(F, omega, a), wc = mul(F, omega, c);
  std::vector<std::array<mpz_class, 2>> rows = {
      {mpz_class(a.x), mpz_class(a.y)},
      {mpz_class(wa.x), mpz_class(wa.y)},
      {mpz_class(c.x), mpz_class(c.y)},
      {mpz_class(wc.x), mpz_class(wc.y)}};
  return row_lattice_index(std::move(rows)) == 1;
}

AlgebraicInt inverse_mod(const FieldDescriptor& F, const AlgebraicInt& a,
                         const AlgebraicInt& c) {
  if (!is_coprime(F, a, c)) throw NotCoprime("inverse_mod: gcd(a, c) != 1");
  if (F.degree == 1) {
    int64_t m = std::abs(c.x);
    if (m == 1) return {0, 0};
    // extended gcd
    int64_t r0 = m, r1 = ((a.x % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
      int64_t q = r0 / r1;
      int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      t0 = t1; t1 = t2;
    }
    int64_t inv = ((t0 % m) + m) % m;
    return {inv, 0};
  }
  // Solve M_a w = e1 (mod Lambda_c) by column reduction of [M_a | B_c]
  // with a tracked unimodular transform.
  AlgebraicInt omega{0, 1};
  AlgebraicInt wc = mul(F, omega, c);
  // Columns: images of 1 and omega under multiplication by a, then the
  // lattice generators c, omega c.
  AlgebraicInt a1 = a, aw = mul(F, omega, a);
  std::array<std::array<mpz_class, 2>, 4> col = {{
      {mpz_class(a1.x), mpz_class(a1.y)},
      {mpz_class(aw.x), mpz_class(aw.y)},
      {mpz_class(c.x), mpz_class(c.y)},
      {mpz_class(wc.x), mpz_class(wc.y)},
  }};
  std::array<std::array<mpz_class, 4>, 4> U;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) U[i][j] = (i == j) ? 1 : 0;
  auto colop = [&](int i, int j, const mpz_class& q) {
    // col_i -= q col_j
    col[i][0] -= q * col[j][0];
    col[i][1] -= q * col[j][1];
    for (int r = 0; r < 4; ++r) U[r][i] -= q * U[r][j];
  };
  // Reduce row 0 across columns to a single pivot.
  for (;;) {
    int piv = -1;
    for (int i = 0; i < 4; ++i)
      if (col[i][0] != 0 && (piv < 0 || abs(col[i][0]) < abs(col[piv][0])))
        piv = i;
    bool more = false;
    for (int i = 0; i < 4; ++i) {
      if (i == piv || col[i][0] == 0) continue;
      mpz_class q = col[i][0] / col[piv][0];
      colop(i, piv, q);
      if (col[i][0] != 0) more = true;
    }
    if (!more) {
      if (piv != 0) {
        std::swap(col[piv], col[0]);
        for (int r = 0; r < 4; ++r) std::swap(U[r][piv], U[r][0]);
      }
      break;
    }
  }
  // Reduce row 1 across columns 1..3.
  for (;;) {
    int piv = -1;
    for (int i = 1; i < 4; ++i)
      if (col[i][1] != 0 && (piv < 0 || abs(col[i][1]) < abs(col[piv][1])))
        piv = i;
    bool more = false;
    for (int i = 1; i < 4; ++i) {
      if (i == piv || col[i][1] == 0) continue;
      mpz_class q = col[i][1] / col[piv][1];
      colop(i, piv, q);
      if (col[i][1] != 0) more = true;
    }
    if (!more) {
      if (piv != 1) {
        std::swap(col[piv], col[1]);
        for (int r = 0; r < 4; ++r) std::swap(U[r][piv], U[r][1]);
      }
      break;
    }
  }
  // H = [c0 c1] lower triangular, |det| = 1 by coprimality.
  mpz_class g = col[0][0], h21 = col[0][1], r = col[1][1];
  if (abs(g * r) != 1)
    throw NumericError("inverse_mod: unexpected lattice index");
  // Solve H z = e1: z0 = 1/g, z1 = -h21 z0 / r.
  mpz_class z0 = g;            // g = +-1, so 1/g = g
  mpz_class z1 = -h21 * z0 * r;  // r = +-1
  mpz_class w0 = U[0][0] * z0 + U[0][1] * z1;
  mpz_class w1 = U[1][0] * z0 + U[1][1] * z1;
  // Canonical reduction of (w0, w1) modulo the HNF basis of Lambda_c.
  std::vector<std::array<mpz_class, 2>> rows = {
      {mpz_class(c.x), mpz_class(c.y)}, {mpz_class(wc.x), mpz_class(wc.y)}};
  std::array<mpz_class, 2> b1, b2;
  row_lattice_index(std::move(rows), &b1, &b2);
  // rows (p,0),(q,r): reduce second coordinate by b2, then first by b1.
  mpz_class q2;
  mpz_fdiv_q(q2.get_mpz_t(), w1.get_mpz_t(), b2[1].get_mpz_t());
  w0 -= q2 * b2[0];
  w1 -= q2 * b2[1];
  mpz_class q1;
  mpz_fdiv_q(q1.get_mpz_t(), w0.get_mpz_t(), b1[0].get_mpz_t());
  w0 -= q1 * b1[0];
  return {static_cast<int64_t>(w0.get_si()), static_cast<int64_t>(w1.get_si())};
}

mpq_class character_exponent(const FieldDescriptor& F, const AlgebraicInt& num,
                             const AlgebraicInt& d0, const AlgebraicInt& eta_c) {
  // tr(num d0 / eta_c) = tr(num d0 conj(eta_c)) / N(eta_c).
  AlgebraicInt w = mul(F, mul(F, num, d0), conj(F, eta_c));
  mpz_class t;
  if (F.degree == 1)
    t = w.x;
  else
    t = 2 * mpz_class(w.x) + F.omega_trace * mpz_class(w.y);
  mpq_class q(t, norm_z(F, eta_c));
  q.canonicalize();
  return q;
}

FieldDescriptor make_field(const std::string& selector) {
  FieldDescriptor F;
  F.name = selector;
  if (selector == "q") {
    F.degree = 1;
    F.disc = 1;
    F.unit_index = 2;
    F.delta_f = {1, 0};
    F.eps0 = {1, 0};
    F.eps0_norm = 1;
    F.eps_t = {1, 0};
    F.eps_t_inv = {1, 0};
    return F;
  }
  long d;
  if (selector == "sqrt2") d = 2;
  else if (selector == "sqrt5") d = 5;
  else if (selector == "sqrt13") d = 13;
  else if (selector == "sqrt17") d = 17;
  else throw UnsupportedField("unsupported field selector: " + selector);

  F.degree = 2;
  F.d = d;
  F.omega_half = (d % 4 == 1);
  F.disc = F.omega_half ? d : 4 * d;
  F.omega_trace = F.omega_half ? 1 : 0;
  F.omega_norm = F.omega_half ? (1 - d) / 4 : -d;

  // Fundamental unit: Pell solution from the continued fraction of sqrt(d),
  // then (for d = 1 mod 4) the smaller half-coordinate unit if one exists.
  int64_t px, py;
  pell_unit(d, &px, &py);
  if (F.omega_half) {
    // u^2 - d v^2 = +-4 with smallest v; v <= 2*py always suffices.
    for (int64_t v = 1;; ++v) {
      int64_t u;
      if (is_square(d * v * v - 4, &u) || is_square(d * v * v + 4, &u)) {
        // (u + v sqrt d)/2 = (u - v)/2 + v w
        F.eps0 = {(u - v) / 2, v};
        break;
      }
      if (v > 2 * py) throw NumericError("fundamental unit search failed");
    }
  } else {
    F.eps0 = {px, py};
  }
  F.eps0_norm = norm(F, F.eps0);
  if (F.eps0_norm != -1)
    throw UnsupportedField("field has N(eps0) != -1; narrow class number > 1");
  F.eps_t = mul(F, F.eps0, F.eps0);
  // N(eps_t) = 1, so the inverse is the conjugate.
  F.eps_t_inv = conj(F, F.eps_t);
  F.unit_index = 4;

  // Totally positive generator of the different: unit multiple of sqrt(d)
  // (d = 1 mod 4) or 2 sqrt(d) (else).
  AlgebraicInt g = F.omega_half ? AlgebraicInt{-1, 2} : AlgebraicInt{0, 2};
  for (const AlgebraicInt& cand :
       {g, neg(g), mul(F, F.eps0, g), neg(mul(F, F.eps0, g))}) {
    if (is_totally_positive(F, cand)) {
      F.delta_f = cand;
      break;
    }
  }
  if (!is_totally_positive(F, F.delta_f))
    throw NumericError("no totally positive different generator found");
  if (std::abs(norm(F, F.delta_f)) != F.disc)
    throw NumericError("|N(delta_F)| != |d_F|");
  return F;
}

}  // namespace hmf::numberfield
