#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"
#include "dihedral/polyalg.hpp"

namespace dihedral::asym {

// Residual acceptance for polished roots: |p(z)| relative to the
// coefficient magnitude at z.
inline constexpr double kRootResidualTol = 1e-12;
// Roots within this band of the unit circle are treated as on-circle and
// excluded from the growth constant.
inline constexpr double kUnitCircleBand = 1e-9;

struct MahlerEstimate {
  double A_roots = 0.0;
  double A_quadrature = 0.0;
  // All 2r roots of z^r P(z), the exact double root at 1 included.
  std::vector<std::complex<double>> roots;
  double agreement = 0.0;  // |A_roots - A_quadrature| / A_roots
};

// All complex roots of an integer polynomial, with multiplicity.  Repeated
// roots are first separated exactly through gcd(p, p'), so the numeric
// stage (companion-matrix eigenvalues plus Newton polish, accepted only
// under the residual check) only ever sees square-free inputs.  Throws
// RootFindingFailed.
std::vector<std::complex<double>> find_roots(const polyalg::IntPoly& p);

// Growth constant A = |eta| * prod_{|z| > 1} |z| over the roots of
// z^r P(z).  The exact double root at z = 1 is deflated before the numeric
// root finder runs, so it never leaks into the product.
MahlerEstimate mahler_roots(const polyalg::SymmetricLaurentPoly& p);

// Midpoint-rule estimate of the same constant: the grid samples
// t_k = (k + 1/2)/grid of log |z^r P(z) / (z-1)^2| at z = e^{2 pi i t_k}
// average to log A.  The (z-1)^2 factor is removed exactly (its Mahler
// integral is zero but its midpoint sum is exactly 2 log(2)/grid, which
// would otherwise bias every estimate).  Throws NonPositiveSample if a
// sample vanishes, which happens exactly when the connectivity gcd
// precondition fails at a grid point.
double mahler_quadrature(const polyalg::SymmetricLaurentPoly& p, long grid);

// Both estimates plus their relative agreement.
MahlerEstimate mahler_estimate(const polyalg::SymmetricLaurentPoly& p,
                               long grid);

// Ratios tau(n) * q / (n t A^n) for n = 1..n_max, omitting n that share a
// factor with gcd(betas, gamma differences) (those graphs are disconnected
// and the ratio is meaningless).  Converges to 1 geometrically.
std::vector<std::pair<long, double>> asymptotic_ratio(
    const genset::GenSet& gs, long n_max);

}  // namespace dihedral::asym
