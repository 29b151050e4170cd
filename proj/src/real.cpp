#include "hmfkernel/real.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace hmf {

std::string Real::str(int digits) const {
  // %.*RNe rounds the decimal output to nearest, ties to even.
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNe", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

std::mutex g_const_mutex;

Real cached_const(int which, prec_t prec) {
  static std::map<std::pair<int, prec_t>, Real> cache;
  std::lock_guard<std::mutex> lk(g_const_mutex);
  auto it = cache.find({which, prec});
  if (it != cache.end()) return it->second;
  Real r(prec);
  switch (which) {
    case 0: mpfr_const_pi(r.raw(), MPFR_RNDN); break;
    case 1: mpfr_const_euler(r.raw(), MPFR_RNDN); break;
    case 2: {
      Real pi(prec + 8);
      mpfr_const_pi(pi.raw(), MPFR_RNDN);
      mpfr_mul_2si(pi.raw(), pi.raw(), 1, MPFR_RNDN);
      mpfr_log(r.raw(), pi.raw(), MPFR_RNDN);
      break;
    }
  }
  cache.emplace(std::make_pair(which, prec), r);
  return r;
}

}  // namespace

Real const_pi(prec_t prec) { return cached_const(0, prec); }
Real const_euler(prec_t prec) { return cached_const(1, prec); }
Real const_log_2pi(prec_t prec) { return cached_const(2, prec); }

}  // namespace hmf
