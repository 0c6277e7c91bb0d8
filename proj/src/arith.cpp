#include "dihedral/arith.hpp"

#include "dihedral/errors.hpp"

namespace dihedral::arith {

std::pair<Int, Int> xi_delta(const genset::GenSet& gs) {
  long b_odd = 0;
  for (long b : gs.betas())
    if (b % 2 != 0) ++b_odd;
  long g_odd = 0, g_even = 0;
  for (long c : gs.gammas()) (c % 2 != 0 ? g_odd : g_even)++;
  Int xi = Int(2 * b_odd + g_odd) * Int(2 * b_odd + g_even);
  // xi = 0 means every generator exponent is even, so no even n is ever
  // connected and delta is never consumed; 0 marks it unavailable.
  return {xi, xi == 0 ? Int(0) : squarefree_part(xi)};
}

Int squarefree_part(Int m) {
  if (m < 1) throw InvalidParameters("squarefree part requires m >= 1");
  Int result(1);
  for (long p = 2; p <= kTrialDivisionBound && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > m) break;
    int parity = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      parity ^= 1;
    }
    if (parity) result *= p;
  }
  if (m == 1) return result;
  // The cofactor has no prime factor below the bound.
  Int root;
  if (is_perfect_square(m, &root)) return result;  // all exponents even
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) return result * m;
  throw FactorizationLimit(
      "cofactor " + m.get_str() +
      " is neither square nor prime within the trial-division bound");
}

ArithDecomposition decompose(const genset::GenSet& gs, long n,
                             const Int& tau) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  if (tau == 0) throw Disconnected("tau = 0: no spanning trees to decompose");
  ArithDecomposition d;
  d.n = n;
  auto [xi, delta] = xi_delta(gs);
  d.xi = xi;
  d.delta = delta;
  Int m, rem;
  mpz_tdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), tau.get_mpz_t(),
              Int(Int(n) * gs.t()).get_mpz_t());
  if (rem != 0)
    throw StructureViolation("n * t does not divide tau");
  if (n % 2 != 0) {
    d.parity_case = "odd";
  } else {
    d.parity_case = "even";
    if (delta == 0)
      throw StructureViolation(
          "nonzero count at even n contradicts xi = 0 (all generator "
          "exponents even)");
    Int m2, rem2;
    mpz_tdiv_qr(m2.get_mpz_t(), rem2.get_mpz_t(), m.get_mpz_t(),
                delta.get_mpz_t());
    if (rem2 != 0)
      throw StructureViolation("delta does not divide tau / (n t) at even n");
    m = m2;
  }
  Int root;
  if (!is_perfect_square(m, &root))
    throw StructureViolation("tau / (n t" +
                             std::string(n % 2 == 0 ? " delta" : "") +
                             ") is not a perfect square");
  d.a = root;
  return d;
}

}  // namespace dihedral::arith
