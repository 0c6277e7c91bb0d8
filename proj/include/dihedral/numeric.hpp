#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>

namespace dihedral {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor of the integer square root.
inline Int isqrt_int(const Int& m) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& m, Int* root = nullptr) {
  if (sgn(m) < 0) return false;
  Int r = isqrt_int(m);
  bool ok = (r * r == m);
  if (ok && root) *root = r;
  return ok;
}

// log2 of a positive big integer, exact to double precision regardless of
// magnitude.  Returns -inf for zero.
inline double log2_int(const Int& m) {
  if (sgn(m) == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, m.get_mpz_t());
  return static_cast<double>(exp2) + std::log2(std::fabs(d));
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace dihedral
