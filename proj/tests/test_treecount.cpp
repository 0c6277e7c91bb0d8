#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "dihedral/errors.hpp"
#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"
#include "dihedral/polyalg.hpp"
#include "dihedral/treecount.hpp"

using namespace dihedral;
using genset::GenSet;

namespace {

// Closed form for the prism family: tau(n) = n (T_n(2) - 1).
Int prism_tau(long n) {
  return Int(n) * (polyalg::cheb_T<Int>(n, Int(2)) - 1);
}

bool log2_within(double log2_value, const Int& reference, double rel_tol) {
  return std::fabs(log2_value - log2_int(reference)) <=
         std::log2(1.0 + rel_tol);
}

GenSet random_graph_valid(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> s_dist(0, 3), t_dist(1, 4);
  long max_beta = (n - 1) / 2;
  long s = std::min(s_dist(rng), max_beta);
  long t = std::min(t_dist(rng), n);
  std::set<long> betas, gammas;
  std::uniform_int_distribution<long> b_dist(1, std::max<long>(max_beta, 1));
  std::uniform_int_distribution<long> g_dist(0, n - 1);
  while (static_cast<long>(betas.size()) < s) betas.insert(b_dist(rng));
  while (static_cast<long>(gammas.size()) < t) gammas.insert(g_dist(rng));
  return GenSet(std::vector<long>(betas.begin(), betas.end()),
                std::vector<long>(gammas.begin(), gammas.end()));
}

}  // namespace

TEST_CASE("exact counts reproduce the prism series") {
  const std::vector<long> expect = {1,    12,   75,    384,
                                    1805, 8100, 35287, 150528};
  GenSet gs({1}, {0});
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(treecount::tau_exact(gs, static_cast<long>(i + 1)) == expect[i]);
}

TEST_CASE("exact counts reproduce the two-rotation three-reflection series") {
  const std::vector<long> expect = {3,      60,      6561,
                                    192000, 9149415, 315059220};
  GenSet gs({1, 2}, {1, 3, 5});
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(treecount::tau_exact(gs, static_cast<long>(i + 1)) == expect[i]);
}

TEST_CASE("exact count matches the prism closed form far out") {
  GenSet gs({1}, {0});
  for (long n : {10, 25, 60, 150})
    CHECK(treecount::tau_exact(gs, n) == prism_tau(n));
}

TEST_CASE("matrix-tree oracle agrees with the resultant engine") {
  std::mt19937 rng(417);
  std::uniform_int_distribution<long> n_dist(3, 18);
  int done = 0;
  while (done < 15) {
    long n = n_dist(rng);
    GenSet gs = random_graph_valid(rng, n);
    if (!genset::is_connected(gs, n)) continue;
    if (polyalg::associated_poly(gs).is_zero()) continue;
    CHECK(treecount::tau_oracle(gs, n) == treecount::tau_exact(gs, n));
    ++done;
  }
}

TEST_CASE("floating engines stay within their pinned tolerances") {
  std::mt19937 rng(418);
  std::uniform_int_distribution<long> n_dist(3, 24);
  int done = 0;
  while (done < 15) {
    long n = n_dist(rng);
    GenSet gs = random_graph_valid(rng, n);
    if (!genset::is_connected(gs, n)) continue;
    if (polyalg::associated_poly(gs).is_zero()) continue;
    Int tau = treecount::tau_exact(gs, n);
    CHECK(log2_within(treecount::tau_spectral_log2(gs, n), tau,
                      treecount::kSpectralRelTol));
    CHECK(log2_within(treecount::tau_chebyshev_log2(gs, n), tau,
                      treecount::kChebyshevRelTol));
    ++done;
  }
}

TEST_CASE("chebyshev engine crosses to the dominant-branch form") {
  GenSet prism({1}, {0});
  Int tau = treecount::tau_exact(prism, 400);
  CHECK(log2_within(treecount::tau_chebyshev_log2(prism, 400), tau,
                    treecount::kChebyshevRelTol));
  CHECK(log2_within(treecount::tau_spectral_log2(prism, 400), tau,
                    treecount::kSpectralRelTol));
  GenSet f2({1, 2}, {1, 3, 5});
  Int tau2 = treecount::tau_exact(f2, 320);
  CHECK(log2_within(treecount::tau_chebyshev_log2(f2, 320), tau2,
                    treecount::kChebyshevRelTol));
}

TEST_CASE("disconnected pairs count zero trees") {
  GenSet gs({2}, {0, 2});  // gcd 2 for even n
  CHECK(treecount::tau_exact(gs, 6) == 0);
  CHECK(treecount::tau_exact(gs, 5) != 0);
  CHECK_THROWS_AS(treecount::tau_oracle(gs, 6), Disconnected);
  treecount::TreeCountReport rep = treecount::report(gs, 6);
  CHECK_FALSE(rep.connected);
  CHECK(rep.graph_valid);
  CHECK_FALSE(rep.tau_oracle.has_value());
  CHECK(rep.tau_exact == 0);
  CHECK(rep.engines_agree);
  CHECK(rep.tau_spectral == 0.0);
}

TEST_CASE("formula-valid but not graph-valid pairs still count") {
  GenSet gs({1}, {0});
  treecount::TreeCountReport rep = treecount::report(gs, 2);
  CHECK(rep.graph_valid == false);
  CHECK(rep.tau_exact == 12);
  CHECK_FALSE(rep.tau_oracle.has_value());
  CHECK(rep.engines_agree);
  CHECK_THROWS_AS(treecount::tau_oracle(gs, 2), InvalidParameters);
}

TEST_CASE("count for n = 1 is the reflection multiplicity") {
  CHECK(treecount::tau_exact(GenSet({1}, {0}), 1) == 1);
  CHECK(treecount::tau_exact(GenSet({1, 2}, {1, 3, 5}), 1) == 3);
  CHECK(treecount::tau_exact(GenSet({3}, {0, 1, 2, 5}), 1) == 4);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(treecount::tau_exact(GenSet({1}, {0}), 0),
                  InvalidParameters);
  CHECK_THROWS_AS(treecount::tau_exact(GenSet({}, {4}), 3), DegenerateFamily);
  CHECK_THROWS_AS(treecount::tau_chebyshev_log2(GenSet({}, {4}), 3),
                  DegenerateFamily);
}

TEST_CASE("closed-form spectrum of the triangular prism") {
  std::vector<treecount::SpectrumPair> sp =
      treecount::spectrum(GenSet({1}, {0}), 3);
  std::vector<double> flat;
  for (const auto& p : sp) {
    flat.push_back(p.lambda1);
    flat.push_back(p.lambda2);
  }
  std::sort(flat.begin(), flat.end());
  const std::vector<double> expect = {0, 2, 3, 3, 5, 5};
  REQUIRE(flat.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(flat[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("closed-form spectrum matches a dense symmetric eigensolve") {
  std::mt19937 rng(419);
  std::uniform_int_distribution<long> n_dist(2, 12);
  int done = 0;
  while (done < 10) {
    long n = n_dist(rng);
    GenSet gs = random_graph_valid(rng, n);
    genset::Graph g = genset::build_graph(gs, n);
    genset::IntegerMatrix lap = genset::laplacian(g);
    Eigen::MatrixXd m(lap.dim(), lap.dim());
    for (long i = 0; i < lap.dim(); ++i)
      for (long j = 0; j < lap.dim(); ++j) m(i, j) = lap(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    std::vector<double> dense(es.eigenvalues().data(),
                              es.eigenvalues().data() + lap.dim());
    std::vector<double> closed;
    for (const auto& p : treecount::spectrum(gs, n)) {
      closed.push_back(p.lambda1);
      closed.push_back(p.lambda2);
    }
    std::sort(closed.begin(), closed.end());
    std::sort(dense.begin(), dense.end());
    REQUIRE(closed.size() == dense.size());
    for (size_t i = 0; i < closed.size(); ++i)
      CHECK(closed[i] == doctest::Approx(dense[i]).epsilon(1e-9).scale(1.0));
    ++done;
  }
}

TEST_CASE("report on the golden families agrees across engines") {
  for (long n = 1; n <= 10; ++n) {
    treecount::TreeCountReport rep =
        treecount::report(GenSet({1, 2}, {1, 3, 5}), n);
    CHECK(rep.engines_agree);
    CHECK(rep.connected);
  }
}

TEST_CASE("engines agree when the spectrum polynomial has multiple roots") {
  // betas empty, gammas {10, 26}: z^16 P(z) = -(z^16 - 1)^2, every root
  // doubled.  The Chebyshev engine must factor them apart to stay accurate.
  GenSet gs({}, {10, 26});
  treecount::TreeCountReport rep = treecount::report(gs, 29);
  CHECK(rep.connected);
  CHECK(rep.engines_agree);
  CHECK(rep.tau_exact > 0);
}
