#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "dihedral/asym.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/genset.hpp"
#include "dihedral/polyalg.hpp"

using namespace dihedral;
using genset::GenSet;
using polyalg::IntPoly;

TEST_CASE("root finder on factored quadratics") {
  auto roots = asym::find_roots(IntPoly({Int(6), Int(-5), Int(1)}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(roots[1].real() == doctest::Approx(3.0).epsilon(1e-12));
  auto imag = asym::find_roots(IntPoly({Int(1), Int(0), Int(1)}));
  REQUIRE(imag.size() == 2);
  CHECK(imag[0].imag() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(imag[1].imag() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(asym::find_roots(IntPoly::constant(Int(5))).empty());
}

TEST_CASE("root finder returns multiple roots with multiplicity") {
  // (z^2 - 1)^2: both roots doubled.
  auto dbl = asym::find_roots(IntPoly({Int(1), Int(0), Int(-2), Int(0),
                                       Int(1)}));
  REQUIRE(dbl.size() == 4);
  CHECK(dbl[0].real() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(dbl[1].real() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(dbl[2].real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dbl[3].real() == doctest::Approx(1.0).epsilon(1e-9));
  // (z - 1)(z - 2)^3 = z^4 - 7 z^3 + 18 z^2 - 20 z + 8.
  auto cub = asym::find_roots(IntPoly({Int(8), Int(-20), Int(18), Int(-7),
                                       Int(1)}));
  REQUIRE(cub.size() == 4);
  CHECK(cub[0].real() == doctest::Approx(1.0).epsilon(1e-9));
  for (int i = 1; i < 4; ++i) {
    CHECK(cub[i].real() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(cub[i].imag()) < 1e-6);
  }
}

TEST_CASE("mahler measure with every root on the unit circle") {
  // betas empty, gammas {10, 26}: z^16 P(z) = -(z^16 - 1)^2, so all roots
  // are doubled 16th roots of unity and the growth constant is |eta| = 1.
  auto p = polyalg::associated_poly(GenSet({}, {10, 26}));
  asym::MahlerEstimate est = asym::mahler_roots(p);
  CHECK(est.A_roots == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(est.roots.size() == 32);
}

TEST_CASE("mahler measure of the prism polynomial is 2 + sqrt(3)") {
  auto p = polyalg::associated_poly(GenSet({1}, {0}));
  asym::MahlerEstimate est = asym::mahler_roots(p);
  CHECK(est.A_roots == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(est.roots.size() == 4);  // double root at 1 plus a reciprocal pair
}

TEST_CASE("mahler measure of the second family is 4(4 + sqrt(15))") {
  auto p = polyalg::associated_poly(GenSet({1, 2}, {1, 3, 5}));
  asym::MahlerEstimate est = asym::mahler_roots(p);
  CHECK(est.A_roots ==
        doctest::Approx(4.0 * (4.0 + std::sqrt(15.0))).epsilon(1e-12));
  CHECK(est.roots.size() == 6);
}

TEST_CASE("quadrature converges spectrally on the deflated polynomial") {
  auto p = polyalg::associated_poly(GenSet({1}, {0}));
  double a_ref = 2.0 + std::sqrt(3.0);
  CHECK(asym::mahler_quadrature(p, 64) == doctest::Approx(a_ref).epsilon(1e-9));
  CHECK(asym::mahler_quadrature(p, 1 << 16) ==
        doctest::Approx(a_ref).epsilon(1e-12));
  CHECK_THROWS_AS(asym::mahler_quadrature(p, 8), InvalidParameters);
}

TEST_CASE("combined estimate reports agreement") {
  auto p = polyalg::associated_poly(GenSet({1, 2}, {1, 3, 5}));
  asym::MahlerEstimate est = asym::mahler_estimate(p, 1 << 12);
  CHECK(est.agreement <= 1e-9);
  CHECK(est.A_quadrature ==
        doctest::Approx(est.A_roots).epsilon(1e-9));
}

TEST_CASE("growth-law ratios approach 1") {
  auto ratios = asym::asymptotic_ratio(GenSet({1}, {0}), 40);
  REQUIRE(ratios.size() == 40);
  CHECK(ratios[0].first == 1);
  CHECK(ratios[1].second == doctest::Approx(0.861561236694).epsilon(1e-9));
  CHECK(std::fabs(ratios.back().second - 1.0) <= 1e-6);
  // Geometric convergence down to the double noise floor, flat after.
  const double floor = 1e-12;
  for (size_t i = 1; i < ratios.size(); ++i) {
    double prev = std::fabs(ratios[i - 1].second - 1.0);
    double cur = std::fabs(ratios[i].second - 1.0);
    if (prev > floor) CHECK(cur < prev);
    else CHECK(cur <= floor);
  }
}

TEST_CASE("ratios skip n sharing a factor with the family gcd") {
  auto ratios = asym::asymptotic_ratio(GenSet({2}, {0, 2}), 12);
  REQUIRE(!ratios.empty());
  for (const auto& [n, ratio] : ratios) {
    CHECK(n % 2 == 1);
    CHECK(std::isfinite(ratio));
  }
}

TEST_CASE("cycle family ratio is exactly stationary") {
  // betas empty, gammas {0, 1}: the graph is the cycle on 2n vertices,
  // tau = 2n, A = 1, q = 1, so the ratio is 1 for every n.
  auto ratios = asym::asymptotic_ratio(GenSet({}, {0, 1}), 10);
  REQUIRE(ratios.size() == 10);
  for (const auto& [n, ratio] : ratios)
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-9));
}
