#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dihedral/arith.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"
#include "dihedral/polyalg.hpp"
#include "dihedral/treecount.hpp"

using namespace dihedral;
using genset::GenSet;

TEST_CASE("xi and its squarefree part on known families") {
  auto [xi1, d1] = arith::xi_delta(GenSet({1}, {0}));
  CHECK(xi1 == 6);
  CHECK(d1 == 6);
  auto [xi2, d2] = arith::xi_delta(GenSet({1, 2}, {1, 3, 5}));
  CHECK(xi2 == 10);
  CHECK(d2 == 10);
  auto [xi3, d3] = arith::xi_delta(GenSet({1, 3}, {0}));
  CHECK(xi3 == 20);
  CHECK(d3 == 5);
  // All exponents even: even n are never connected and delta is the 0
  // sentinel.
  auto [xi4, d4] = arith::xi_delta(GenSet({2}, {0, 2}));
  CHECK(xi4 == 0);
  CHECK(d4 == 0);
}

TEST_CASE("even-n decomposition refuses the xi = 0 sentinel") {
  CHECK_THROWS_AS(arith::decompose(GenSet({2}, {0, 2}), 4, Int(48)),
                  StructureViolation);
}

TEST_CASE("P(-1) equals 4 xi on random generating sets") {
  std::mt19937 rng(420);
  std::uniform_int_distribution<long> s_dist(0, 3), t_dist(1, 4);
  std::uniform_int_distribution<long> b_dist(1, 9), g_dist(0, 11);
  for (int trial = 0; trial < 40; ++trial) {
    long s = s_dist(rng), t = t_dist(rng);
    std::set<long> betas, gammas;
    while (static_cast<long>(betas.size()) < s) betas.insert(b_dist(rng));
    while (static_cast<long>(gammas.size()) < t) gammas.insert(g_dist(rng));
    GenSet gs(std::vector<long>(betas.begin(), betas.end()),
              std::vector<long>(gammas.begin(), gammas.end()));
    auto [xi, delta] = arith::xi_delta(gs);
    CHECK(polyalg::associated_poly(gs).eval_minus_one() == 4 * xi);
  }
}

TEST_CASE("squarefree part by trial division") {
  CHECK(arith::squarefree_part(Int(1)) == 1);
  CHECK(arith::squarefree_part(Int(4)) == 1);
  CHECK(arith::squarefree_part(Int(12)) == 3);
  CHECK(arith::squarefree_part(Int(360)) == 10);
  CHECK(arith::squarefree_part(Int(49)) == 1);
  CHECK(arith::squarefree_part(Int(97)) == 97);
  CHECK(arith::squarefree_part(Int(2) * 97 * 97 * 5) == 10);
}

TEST_CASE("squarefree part resolves large cofactors or gives up") {
  Int p(1000003);  // prime beyond the trial-division bound
  CHECK(arith::squarefree_part(p * p) == 1);
  CHECK(arith::squarefree_part(2 * p * p) == 2);
  CHECK(arith::squarefree_part(2 * p) == 2 * p);
  CHECK_THROWS_AS(arith::squarefree_part(p * Int(1000033)),
                  FactorizationLimit);
}

TEST_CASE("decomposition of the prism counts") {
  GenSet gs({1}, {0});
  const std::vector<long> expect_a = {1, 1, 5, 4, 19, 15, 71, 56};
  for (long n = 1; n <= 8; ++n) {
    arith::ArithDecomposition d =
        arith::decompose(gs, n, treecount::tau_exact(gs, n));
    CHECK(d.n == n);
    CHECK(d.xi == 6);
    CHECK(d.delta == 6);
    CHECK(d.a == expect_a[n - 1]);
    CHECK(d.parity_case == (n % 2 ? "odd" : "even"));
  }
}

TEST_CASE("decomposition of the second family") {
  GenSet gs({1, 2}, {1, 3, 5});
  const std::vector<long> expect_a = {1, 1, 27, 40, 781, 1323};
  for (long n = 1; n <= 6; ++n) {
    arith::ArithDecomposition d =
        arith::decompose(gs, n, treecount::tau_exact(gs, n));
    CHECK(d.delta == 10);
    CHECK(d.a == expect_a[n - 1]);
  }
}

TEST_CASE("decomposition rejects counts with the wrong shape") {
  GenSet gs({1}, {0});
  CHECK_THROWS_AS(arith::decompose(gs, 3, Int(76)), StructureViolation);
  CHECK_THROWS_AS(arith::decompose(gs, 3, Int(78)), StructureViolation);
  CHECK_THROWS_AS(arith::decompose(gs, 2, Int(14)), StructureViolation);
  CHECK_THROWS_AS(arith::decompose(gs, 4, Int(0)), Disconnected);
}

TEST_CASE("decomposition certifies random connected instances") {
  std::mt19937 rng(421);
  std::uniform_int_distribution<long> n_dist(3, 20);
  int done = 0;
  while (done < 25) {
    long n = n_dist(rng);
    long max_beta = (n - 1) / 2;
    std::uniform_int_distribution<long> s_dist(0, std::min<long>(3, max_beta));
    std::uniform_int_distribution<long> t_dist(1, std::min<long>(4, n));
    std::uniform_int_distribution<long> b_dist(1, max_beta);
    std::uniform_int_distribution<long> g_dist(0, n - 1);
    long s = s_dist(rng), t = t_dist(rng);
    std::set<long> betas, gammas;
    while (static_cast<long>(betas.size()) < s) betas.insert(b_dist(rng));
    while (static_cast<long>(gammas.size()) < t) gammas.insert(g_dist(rng));
    GenSet gs(std::vector<long>(betas.begin(), betas.end()),
              std::vector<long>(gammas.begin(), gammas.end()));
    if (!genset::is_connected(gs, n)) continue;
    if (polyalg::associated_poly(gs).is_zero()) continue;
    Int tau = treecount::tau_exact(gs, n);
    arith::ArithDecomposition d = arith::decompose(gs, n, tau);
    Int base = Int(n) * gs.t() * d.a * d.a;
    if (n % 2 == 0) base *= d.delta;
    CHECK(base == tau);
    ++done;
  }
}
