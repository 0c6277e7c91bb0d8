#pragma once

#include <vector>

#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"
#include "dihedral/polyalg.hpp"

namespace dihedral::genfun {

struct RationalGF {
  polyalg::IntPoly numerator;
  polyalg::IntPoly denominator;  // constant term normalized to 1
  std::vector<Rat> recurrence;   // tau(n) = sum_i recurrence[i-1] tau(n-i)
  long order = 0;
  long terms_used = 0;
};

struct FitResult {
  long order = 0;
  std::vector<Rat> coefficients;
};

// Bound on the linear recurrence order of a family whose associated
// polynomial has half-degree r.  The closed form expands into geometric
// terms eta^n times subset products of the 2(r-1) off-unit roots (at most
// 3^{r-1} distinct bases), each doubled by the linear factor n.
long order_cap(long r);

// Terms to generate before fitting so the cap plus holdout fits.
long default_terms(long r);

// Minimal-order exact linear recurrence: the smallest L whose coefficients
// (solved over the rationals) satisfy every supplied row
// tau(n) = sum_{i=1..L} c_i tau(n-i), L+1 <= n <= #terms.  A candidate L is
// admissible only when 2L+4 <= #terms, so at least four rows beyond the
// square system always validate the fit.  Throws InsufficientTerms (fewer
// than 6 terms) or NoRecurrenceFound (cap exhausted).
FitResult fit_recurrence(const std::vector<Int>& taus, long max_order = 0);

// Closes the recurrence into F(x) = N(x)/D(x) with
// F = sum_{n>=1} tau(n) x^n: D from the recurrence, N = (D * F) truncated,
// both reduced to coprime integer polynomials.  Throws
// NonIntegerCoefficients if the reduced denominator fails D(0) = 1, which
// would contradict integrality of the series.
RationalGF rational_gf(const std::vector<Int>& taus,
                       const std::vector<Rat>& recurrence);

// Functional-equation check F(x) = F(1/(eta^2 x)), the involution fixing
// u = (eta x + 1/(eta x))/2, decided exactly over the rationals.  Requires
// eta != 0.
bool verify_symmetry(const RationalGF& gf, const Int& eta);

// Power-series coefficients of x^1..x^count of N/D, exact.
std::vector<Int> expand_series(const RationalGF& gf, long count);

// End-to-end pipeline: exact counts for n = 1..terms (auto-sized from the
// family when terms = 0), fit, and closure.
RationalGF gf_for_family(const genset::GenSet& gs, long terms = 0);

}  // namespace dihedral::genfun
