#include "dihedral/asym.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dihedral/errors.hpp"
#include "dihedral/treecount.hpp"

namespace dihedral::asym {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

std::complex<double> horner(const std::vector<double>& c,
                            std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::complex<double> horner_deriv(const std::vector<double>& c,
                                  std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c.size(); i-- > 1;)
    acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

double coeff_scale(const std::vector<double>& c, std::complex<double> z) {
  double m = std::abs(z);
  double pw = 1.0;
  double s = 0.0;
  for (double x : c) {
    s += std::fabs(x) * pw;
    pw *= m;
  }
  return s;
}

polyalg::IntPoly derivative(const polyalg::IntPoly& p) {
  std::vector<Int> d;
  for (long i = 1; i <= p.degree(); ++i) d.push_back(p.coeff(i) * i);
  return polyalg::IntPoly(std::move(d));
}

}  // namespace

std::vector<std::complex<double>> find_roots(const polyalg::IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cannot find roots of zero");
  const long d = p.degree();
  std::vector<std::complex<double>> roots;
  if (d == 0) return roots;
  // Multiple roots stall the Newton polish, so they are split off exactly:
  // the roots of p are those of the square-free quotient p / g plus those
  // of g = gcd(p, p'), which carries each root once less.  Every leaf of
  // the recursion is square-free and polishes quadratically.
  polyalg::IntPoly g = polyalg::poly_gcd(p, derivative(p));
  if (g.degree() >= 1) {
    roots = find_roots(polyalg::poly_divexact(p, g));
    std::vector<std::complex<double>> inner = find_roots(g);
    roots.insert(roots.end(), inner.begin(), inner.end());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return roots;
  }
  std::vector<double> c(d + 1);
  for (long i = 0; i <= d; ++i) c[i] = mpz_get_d(p.coeff(i).get_mpz_t());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (long i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (long i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success)
    throw RootFindingFailed("companion eigenproblem did not converge");
  for (long i = 0; i < d; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    // Newton polish, keeping the best iterate in case of stagnation.
    std::complex<double> best = z;
    double best_res = std::abs(horner(c, z));
    for (int it = 0; it < 60; ++it) {
      std::complex<double> dp = horner_deriv(c, z);
      if (dp == std::complex<double>(0.0, 0.0)) break;
      std::complex<double> step = horner(c, z) / dp;
      z -= step;
      double res = std::abs(horner(c, z));
      if (res < best_res) {
        best_res = res;
        best = z;
      }
      if (std::abs(step) <= 1e-16 * (std::abs(z) + 1e-300)) break;
    }
    if (best_res > kRootResidualTol * coeff_scale(c, best))
      throw RootFindingFailed("root candidate fails the residual check");
    roots.push_back(best);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

static MahlerEstimate mahlerify(const polyalg::SymmetricLaurentPoly& p,
                                bool with_roots) {
  if (p.is_zero())
    throw DegenerateFamily("associated polynomial vanishes identically");
  MahlerEstimate est;
  polyalg::IntPoly reduced = polyalg::deflate_at_one(p.to_int_poly(), 2);
  std::vector<std::complex<double>> found = find_roots(reduced);
  double log2_a = log2_int(abs(p.leading()));
  for (const auto& z : found) {
    double mod = std::abs(z);
    if (std::fabs(mod - 1.0) < kUnitCircleBand) continue;
    if (mod > 1.0) log2_a += std::log2(mod);
  }
  est.A_roots = std::exp2(log2_a);
  if (with_roots) {
    est.roots.assign(2, std::complex<double>(1.0, 0.0));
    est.roots.insert(est.roots.end(), found.begin(), found.end());
  }
  return est;
}

MahlerEstimate mahler_roots(const polyalg::SymmetricLaurentPoly& p) {
  return mahlerify(p, true);
}

double mahler_quadrature(const polyalg::SymmetricLaurentPoly& p, long grid) {
  if (grid < 16) throw InvalidParameters("quadrature grid must be >= 16");
  if (p.is_zero())
    throw DegenerateFamily("associated polynomial vanishes identically");
  polyalg::IntPoly reduced = polyalg::deflate_at_one(p.to_int_poly(), 2);
  std::vector<double> c(reduced.degree() + 1);
  for (long i = 0; i <= reduced.degree(); ++i)
    c[i] = mpz_get_d(reduced.coeff(i).get_mpz_t());
  long double acc = 0.0L;
  for (long k = 0; k < grid; ++k) {
    long double t = (static_cast<long double>(k) + 0.5L) / grid;
    double phi = static_cast<double>(kTwoPi * t);
    double mod =
        std::abs(horner(c, std::complex<double>(std::cos(phi), std::sin(phi))));
    if (!(mod > 0.0))
      throw NonPositiveSample(
          "quadrature sample vanished: connectivity gcd precondition fails "
          "on the grid");
    acc += std::log2(mod);
  }
  return std::exp2(static_cast<double>(acc / grid));
}

MahlerEstimate mahler_estimate(const polyalg::SymmetricLaurentPoly& p,
                               long grid) {
  MahlerEstimate est = mahlerify(p, true);
  est.A_quadrature = mahler_quadrature(p, grid);
  est.agreement = std::fabs(est.A_roots - est.A_quadrature) / est.A_roots;
  return est;
}

std::vector<std::pair<long, double>> asymptotic_ratio(
    const genset::GenSet& gs, long n_max) {
  if (n_max < 1) throw InvalidParameters("n_max must be >= 1");
  polyalg::SymmetricLaurentPoly p = polyalg::associated_poly(gs);
  Int q = polyalg::q_constant(gs);
  MahlerEstimate est = mahlerify(p, false);
  double log2_a = std::log2(est.A_roots);
  long d = 0;
  for (long b : gs.betas()) d = std::gcd(d, b);
  const auto& gam = gs.gammas();
  for (size_t j = 0; j < gam.size(); ++j)
    for (size_t k = j + 1; k < gam.size(); ++k)
      d = std::gcd(d, gam[k] - gam[j]);
  std::vector<std::pair<long, double>> out;
  for (long n = 1; n <= n_max; ++n) {
    if (d != 0 && std::gcd(n, d) != 1) continue;
    Int tau = treecount::tau_exact(gs, n);
    double l2 = log2_int(tau) + log2_int(q) -
                std::log2(static_cast<double>(n)) -
                std::log2(static_cast<double>(gs.t())) -
                static_cast<double>(n) * log2_a;
    out.emplace_back(n, std::exp2(l2));
  }
  return out;
}

}  // namespace dihedral::asym
