#pragma once

#include <vector>

#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral::polyalg {

// Dense univariate polynomial over the integers, coefficients stored low
// degree first and trimmed so the leading coefficient is nonzero.  The zero
// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  // 1 + z + ... + z^degree; with degree 0 this is the constant 1.
  static IntPoly all_ones(long degree);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(long k) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  Int eval(const Int& x) const;
  Int content() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Palindromic Laurent polynomial c0 + sum_k c_k (z^k + z^-k), stored as
// [c0..cr] with the leading coefficient cr nonzero (the zero polynomial is
// the empty vector).  This is the shape of the associated polynomial
// P(z) = A(z) A(1/z) - B(z) B(1/z) of a generating set, whose values on the
// unit circle are real.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly() = default;
  explicit SymmetricLaurentPoly(std::vector<Int> coeffs);

  long half_degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(long k) const;  // |k| <= half_degree
  // Leading coefficient eta = c_r; may be negative.
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool operator==(const SymmetricLaurentPoly& o) const { return c_ == o.c_; }

  // z^r P(z): the ordinary integer polynomial of degree 2r with the same
  // nonzero roots.
  IntPoly to_int_poly() const;

  // P(-1) = c0 + 2 sum_k (-1)^k c_k, exact.
  Int eval_minus_one() const;

 private:
  std::vector<Int> c_;
};

// Expands P(z) = A(z) A(1/z) - B(z) B(1/z) for the generating set, where
// A(z) = 2s + t - sum_i (z^beta_i + z^-beta_i) and B(z) = -sum_j z^gamma_j.
// Cancellation is exact, so the stored half-degree r and leading
// coefficient eta reflect the true degree, which can be lower than
// max(2 beta_max, gamma_max - gamma_min).
SymmetricLaurentPoly associated_poly(const genset::GenSet& gs);

// q = 2t sum beta^2 + sum_{j<k} (gamma_j - gamma_k)^2, cross-checked against
// the symbolic identity q = -P''(1)/2.  Throws DegenerateFamily when q = 0
// (no rotations and a single reflection), where every closed form collapses.
Int q_constant(const genset::GenSet& gs);

// Chebyshev-basis companion of P: the unique Q with Q((z + 1/z)/2) = P(z),
// computed exactly as Q(w) = c0 + sum_k 2 c_k T_k(w).  deg Q = r and
// Q(1) = P(1) = 0.
IntPoly chebyshev_transform(const SymmetricLaurentPoly& p);

// Resultant of two nonzero integer polynomials via the subresultant
// polynomial remainder sequence (fraction-free; every division is exact).
// Sign convention: res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots
// alpha of a, the Sylvester determinant.  Throws ZeroPolynomial.
Int resultant(IntPoly a, IntPoly b);

// Chebyshev polynomial of the first kind by the three-term recurrence
// T_{k+1} = 2x T_k - T_{k-1}; exact over integer or rational x.
template <typename T>
T cheb_T(long n, const T& x) {
  if (n == 0) return T(1);
  T prev(1);
  T cur = x;
  for (long k = 1; k < n; ++k) {
    T next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// P(e^{i phi}) = c0 + sum_k 2 c_k cos(k phi), accumulated in long double.
// Real by palindromy, and nonnegative for every associated polynomial.
double eval_unit_circle(const SymmetricLaurentPoly& p, double phi);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;  // false when free variables were fixed to zero
  std::vector<Rat> x;
};

// Exact Gaussian elimination over the rationals for a rectangular system
// m x = rhs.  Deterministic pivoting (first nonzero entry scanning rows
// top-down); free variables are set to zero; inconsistency is flagged
// rather than thrown.
LinearSolution ff_solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs);

// Exact determinant by fraction-free (Bareiss) elimination; the matrix is
// consumed.  Zero-pivot columns short-circuit to 0.
Int det_bareiss(genset::IntegerMatrix m);

// Exact division by (z - 1)^multiplicity; throws DivisibilityViolation if
// any synthetic-division remainder is nonzero.
IntPoly deflate_at_one(const IntPoly& p, long multiplicity);

// Primitive gcd of integer polynomials (monic-free, content 1, positive
// leading coefficient); gcd(p, 0) = primitive part of p.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Quotient of an exact division a / b; throws DivisibilityViolation if b
// does not divide a over the rationals or the quotient is not integral.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

}  // namespace dihedral::polyalg
