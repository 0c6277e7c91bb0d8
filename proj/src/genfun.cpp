#include "dihedral/genfun.hpp"

#include <algorithm>

#include "dihedral/errors.hpp"
#include "dihedral/parallel.hpp"
#include "dihedral/treecount.hpp"

namespace dihedral::genfun {

long order_cap(long r) {
  long cap = 2;
  for (long i = 1; i < r; ++i) cap *= 3;
  return cap + 2;
}

long default_terms(long r) { return 2 * order_cap(r) + 12; }

FitResult fit_recurrence(const std::vector<Int>& taus, long max_order) {
  const long n_terms = static_cast<long>(taus.size());
  if (n_terms < 6)
    throw InsufficientTerms("recurrence fitting needs at least 6 terms");
  long cap = (n_terms - 4) / 2;
  if (max_order > 0) cap = std::min(cap, max_order);
  for (long order = 1; order <= cap; ++order) {
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> rhs;
    m.reserve(n_terms - order);
    for (long n = order + 1; n <= n_terms; ++n) {
      std::vector<Rat> row(order);
      for (long i = 1; i <= order; ++i) row[i - 1] = Rat(taus[n - i - 1]);
      m.push_back(std::move(row));
      rhs.push_back(Rat(taus[n - 1]));
    }
    polyalg::LinearSolution sol = polyalg::ff_solve(std::move(m),
                                                    std::move(rhs));
    if (sol.consistent) return {order, std::move(sol.x)};
  }
  throw NoRecurrenceFound("no linear recurrence of order <= " +
                          std::to_string(cap) + " fits the terms");
}

RationalGF rational_gf(const std::vector<Int>& taus,
                       const std::vector<Rat>& recurrence) {
  const long order = static_cast<long>(recurrence.size());
  if (static_cast<long>(taus.size()) < order + 1)
    throw InsufficientTerms("need more terms than the recurrence order");
  // D(x) = 1 - sum c_i x^i over the rationals, cleared to integers.
  Int lcm(1);
  for (const Rat& c : recurrence) {
    Int den = c.get_den();
    lcm = lcm / gcd_int(lcm, den) * den;
  }
  std::vector<Int> d(order + 1);
  d[0] = lcm;
  for (long i = 1; i <= order; ++i) {
    Rat scaled = recurrence[i - 1] * Rat(lcm);
    d[i] = -scaled.get_num();  // den is 1 by construction
  }
  polyalg::IntPoly den_poly((std::vector<Int>(d)));
  Int content = den_poly.content();
  if (content > 1) {
    std::vector<Int> v = den_poly.coeffs();
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(),
                                  content.get_mpz_t());
    den_poly = polyalg::IntPoly(std::move(v));
  }
  // N = D * F truncated below x^{order+1}; tau(0) = 0.
  std::vector<Int> num(order + 1);
  for (long k = 0; k <= order; ++k) {
    Int acc(0);
    for (long i = 0; i <= k; ++i) {
      long tau_index = k - i;  // coefficient of x^{k-i} in F
      if (tau_index >= 1) acc += den_poly.coeff(i) * taus[tau_index - 1];
    }
    num[k] = acc;
  }
  polyalg::IntPoly num_poly(std::move(num));
  polyalg::IntPoly g = polyalg::poly_gcd(num_poly, den_poly);
  if (g.degree() > 0 || (g.degree() == 0 && g.coeff(0) != 1)) {
    num_poly = polyalg::poly_divexact(num_poly, g);
    den_poly = polyalg::poly_divexact(den_poly, g);
  }
  if (sgn(den_poly.coeff(0)) < 0) {
    num_poly = num_poly * Int(-1);
    den_poly = den_poly * Int(-1);
  }
  if (den_poly.coeff(0) != 1)
    throw NonIntegerCoefficients(
        "reduced denominator has constant term " +
        den_poly.coeff(0).get_str() +
        "; the series is not an integer rational function");
  RationalGF gf;
  gf.numerator = std::move(num_poly);
  gf.denominator = std::move(den_poly);
  gf.recurrence = recurrence;
  gf.order = order;
  gf.terms_used = static_cast<long>(taus.size());
  return gf;
}

bool verify_symmetry(const RationalGF& gf, const Int& eta) {
  if (eta == 0) throw InvalidParameters("eta must be nonzero");
  const polyalg::IntPoly& n = gf.numerator;
  const polyalg::IntPoly& d = gf.denominator;
  const Int eta_sq = eta * eta;
  // Laurent polynomials in x as exponent -> coefficient maps.  The
  // reciprocal substitution sends c x^i to c eta^-2i x^-i.
  auto subst = [&](const polyalg::IntPoly& p, bool reciprocal) {
    std::map<long, Rat> out;
    for (long i = 0; i <= p.degree(); ++i) {
      if (p.coeff(i) == 0) continue;
      Rat c(p.coeff(i));
      if (reciprocal && i > 0) c *= make_rat(Int(1), pow_int(eta_sq, i));
      out[reciprocal ? -i : i] += c;
    }
    return out;
  };
  auto mul = [](const std::map<long, Rat>& a, const std::map<long, Rat>& b) {
    std::map<long, Rat> out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    for (auto it = out.begin(); it != out.end();)
      it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
  };
  // N(x) D(1/(eta^2 x)) == N(1/(eta^2 x)) D(x).
  return mul(subst(n, false), subst(d, true)) ==
         mul(subst(n, true), subst(d, false));
}

std::vector<Int> expand_series(const RationalGF& gf, long count) {
  if (gf.denominator.coeff(0) != 1)
    throw NonIntegerCoefficients("denominator constant term must be 1");
  std::vector<Int> a(count + 1);
  for (long k = 0; k <= count; ++k) {
    Int acc = gf.numerator.coeff(k);
    long dd = gf.denominator.degree();
    for (long i = 1; i <= std::min<long>(k, dd); ++i)
      acc -= gf.denominator.coeff(i) * a[k - i];
    a[k] = acc;
  }
  return std::vector<Int>(a.begin() + 1, a.end());
}

RationalGF gf_for_family(const genset::GenSet& gs, long terms) {
  polyalg::SymmetricLaurentPoly p = polyalg::associated_poly(gs);
  if (p.is_zero())
    throw DegenerateFamily("associated polynomial vanishes identically");
  long cap = order_cap(p.half_degree());
  long n_terms = terms > 0 ? terms : default_terms(p.half_degree());
  std::vector<Int> taus(n_terms);
  parallel_for(0, n_terms,
               [&](long i) { taus[i] = treecount::tau_exact(gs, i + 1); });
  FitResult fit = fit_recurrence(taus, cap);
  return rational_gf(taus, fit.coefficients);
}

}  // namespace dihedral::genfun
