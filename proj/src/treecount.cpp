#include "dihedral/treecount.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "dihedral/asym.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/polyalg.hpp"

namespace dihedral::treecount {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;
// Switch from the exact three-term recurrence to dominant-branch magnitudes.
constexpr long kChebRecurrenceLimit = 300;

double neg_inf() { return -std::numeric_limits<double>::infinity(); }

bool log2_close(double la, double lb, double rel_tol) {
  if (std::isinf(la) && std::isinf(lb) && la < 0 && lb < 0) return true;
  return std::fabs(la - lb) <= std::log2(1.0 + rel_tol);
}

// log2 |2 T_n(w) - 2| for complex w, overflow-safe.
double cheb_factor_log2(long n, std::complex<double> w) {
  if (n <= kChebRecurrenceLimit) {
    std::complex<double> prev(1.0, 0.0);
    std::complex<double> cur = w;
    for (long k = 1; k < n; ++k) {
      std::complex<double> next = 2.0 * w * cur - prev;
      prev = cur;
      cur = next;
    }
    if (n == 0) cur = prev;
    double f = std::abs(2.0 * cur - 2.0);
    if (std::isfinite(f)) return f == 0.0 ? neg_inf() : std::log2(f);
  }
  // 2 T_n(w) - 2 = zeta^n (1 - zeta^-n)^2 with zeta = w + sqrt(w^2 - 1),
  // branch chosen so |zeta| >= 1.
  std::complex<double> root = std::sqrt(w * w - 1.0);
  std::complex<double> zeta = w + root;
  if (std::abs(zeta) < 1.0) zeta = w - root;
  double mod = std::abs(zeta);
  if (mod <= 1.0 + 1e-12) {
    // Unit-circle branch: 2 T_n(cos theta) - 2 = 2 cos(n theta) - 2.
    double theta = std::arg(zeta);
    double f = std::fabs(2.0 * std::cos(static_cast<double>(n) * theta) - 2.0);
    return f == 0.0 ? neg_inf() : std::log2(f);
  }
  std::complex<double> zeta_mn =
      std::exp(-static_cast<double>(n) * std::log(zeta));
  double corr = std::abs(1.0 - zeta_mn);
  double base = static_cast<double>(n) * std::log2(mod);
  return corr == 0.0 ? neg_inf() : base + 2.0 * std::log2(corr);
}

}  // namespace

Int tau_exact(const genset::GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  polyalg::SymmetricLaurentPoly p = polyalg::associated_poly(gs);
  if (p.is_zero())
    throw DegenerateFamily("associated polynomial vanishes identically");
  polyalg::IntPoly f = polyalg::IntPoly::all_ones(n - 1);
  polyalg::IntPoly g = p.to_int_poly();
  Int res = polyalg::resultant(f, g);
  Int m = Int(gs.t()) * res;
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(),
              Int(n).get_mpz_t());
  if (rem != 0)
    throw DivisibilityViolation("n does not divide t * resultant");
  if (m != 0) {
    // The signed identity t * res = (-1)^{r(n-1)} * n * tau must hold.
    int expected = (p.half_degree() % 2 != 0 && (n - 1) % 2 != 0) ? -1 : 1;
    if (sgn(m) != expected)
      throw std::logic_error("resultant sign inconsistent with closed form");
  }
  return abs(quot);
}

Int tau_oracle(const genset::GenSet& gs, long n) {
  genset::Graph g = genset::build_graph(gs, n);
  if (!genset::connected_bfs(g))
    throw Disconnected("graph is disconnected; no spanning tree exists");
  genset::IntegerMatrix lap = genset::laplacian(g);
  long d = lap.dim() - 1;
  genset::IntegerMatrix minor(d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) minor(i, j) = lap(i, j);
  Int det = polyalg::det_bareiss(std::move(minor));
  if (sgn(det) <= 0)
    throw std::logic_error("Kirchhoff cofactor of a connected graph must be positive");
  return det;
}

double tau_spectral_log2(const genset::GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  polyalg::SymmetricLaurentPoly p = polyalg::associated_poly(gs);
  if (p.is_zero())
    throw DegenerateFamily("associated polynomial vanishes identically");
  double acc = std::log2(static_cast<double>(gs.t())) -
               std::log2(static_cast<double>(n));
  for (long j = 1; j < n; ++j) {
    double phi = static_cast<double>(kTwoPi * j / n);
    double v = polyalg::eval_unit_circle(p, phi);
    if (v <= 0.0) return neg_inf();  // an exact zero factor, up to rounding
    acc += std::log2(v);
  }
  return acc;
}

double tau_spectral(const genset::GenSet& gs, long n) {
  return std::exp2(tau_spectral_log2(gs, n));
}

double tau_chebyshev_log2(const genset::GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  polyalg::SymmetricLaurentPoly p = polyalg::associated_poly(gs);
  Int q = polyalg::q_constant(gs);  // DegenerateFamily when q = 0
  polyalg::IntPoly cheb = polyalg::chebyshev_transform(p);
  // Q(1) = P(1) = 0 identically; w = 1 is excluded from the product.
  polyalg::IntPoly reduced = polyalg::deflate_at_one(cheb, 1);
  std::vector<std::complex<double>> roots = asym::find_roots(reduced);
  double acc = std::log2(static_cast<double>(n)) +
               std::log2(static_cast<double>(gs.t())) +
               static_cast<double>(n) * log2_int(abs(p.leading())) -
               log2_int(q);
  for (const auto& w : roots) acc += cheb_factor_log2(n, w);
  return acc;
}

double tau_chebyshev(const genset::GenSet& gs, long n) {
  return std::exp2(tau_chebyshev_log2(gs, n));
}

std::vector<SpectrumPair> spectrum(const genset::GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  std::vector<SpectrumPair> out;
  out.reserve(n);
  for (long j = 0; j < n; ++j) {
    long double a = static_cast<long double>(gs.degree());
    for (long b : gs.betas()) {
      long m = (j * b) % n;
      a -= 2.0L * cosl(kTwoPi * m / n);
    }
    long double re = 0.0L, im = 0.0L;
    for (long c : gs.gammas()) {
      long m = (j * c) % n;
      re += cosl(kTwoPi * m / n);
      im += sinl(kTwoPi * m / n);
    }
    long double habs = sqrtl(re * re + im * im);
    out.push_back({j, static_cast<double>(a + habs),
                   static_cast<double>(a - habs)});
  }
  return out;
}

TreeCountReport report(const genset::GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  TreeCountReport rep;
  rep.n = n;
  genset::ValidationReport val = genset::validate(gs, n);
  rep.graph_valid = val.graph_valid;
  rep.connected = genset::is_connected(gs, n);
  rep.tau_exact = tau_exact(gs, n);
  if (rep.graph_valid && rep.connected) rep.tau_oracle = tau_oracle(gs, n);
  double spectral_l2 = tau_spectral_log2(gs, n);
  double cheb_l2 = tau_chebyshev_log2(gs, n);
  rep.tau_spectral = std::exp2(spectral_l2);
  rep.tau_chebyshev = std::exp2(cheb_l2);
  if (!rep.connected) {
    rep.engines_agree = (rep.tau_exact == 0);
    return rep;
  }
  double exact_l2 = log2_int(rep.tau_exact);
  rep.engines_agree = log2_close(spectral_l2, exact_l2, kSpectralRelTol) &&
                      log2_close(cheb_l2, exact_l2, kChebyshevRelTol) &&
                      (!rep.tau_oracle || *rep.tau_oracle == rep.tau_exact);
  return rep;
}

}  // namespace dihedral::treecount
