#pragma once

#include <string>
#include <utility>

#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral::arith {

// Largest prime examined by squarefree_part before giving up.
inline constexpr long kTrialDivisionBound = 1000000;

struct ArithDecomposition {
  long n = 0;
  Int xi;
  Int delta;  // squarefree part of xi
  Int a;      // tau = n t a^2 (n odd) or n t delta a^2 (n even)
  std::string parity_case;  // "odd" or "even"
};

// xi = (2 B_odd + G_odd)(2 B_odd + G_even) where B_odd counts odd rotation
// exponents and G_odd/G_even the odd/even reflection exponents; delta is
// its squarefree part.  Satisfies P(-1) = 4 xi.  xi = 0 exactly when every
// exponent is even; no even n is connected then, and delta is reported as 0
// because the even-n decomposition can never apply.
std::pair<Int, Int> xi_delta(const genset::GenSet& gs);

// Product of the primes dividing m to an odd power.  Trial division up to
// kTrialDivisionBound, then exact square / primality detection on the
// remaining cofactor; throws FactorizationLimit if the cofactor stays
// ambiguous.  Requires m >= 1.
Int squarefree_part(Int m);

// Certifies the square structure of an exact count: tau/(n t) must be an
// integer, a perfect square for odd n, and delta times a perfect square for
// even n.  Throws StructureViolation when the certified shape fails and
// Disconnected when tau = 0.
ArithDecomposition decompose(const genset::GenSet& gs, long n,
                             const Int& tau);

}  // namespace dihedral::arith
