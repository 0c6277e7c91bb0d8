#include "dihedral/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dihedral/errors.hpp"

namespace dihedral::polyalg {

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, all integral.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  const Int& d = b.leading();
  long e = a.degree() - b.degree() + 1;
  std::vector<Int> r = a.coeffs();
  long db = b.degree();
  while (true) {
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
    if (dr < db) break;
    Int top = r[dr];
    for (long i = 0; i <= dr; ++i) r[i] *= d;
    for (long i = 0; i <= db; ++i) r[dr - db + i] -= top * b.coeffs()[i];
    --e;
  }
  IntPoly rem(std::move(r));
  if (e > 0) rem = rem * pow_int(d, e);
  return rem;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  std::vector<Int> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::all_ones(long degree) {
  return IntPoly(std::vector<Int>(degree + 1, Int(1)));
}

Int IntPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return Int(0);
  return c_[k];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < o.c_.size()) v[i] += o.c_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < o.c_.size()) v[i] -= o.c_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& k) const {
  std::vector<Int> v = c_;
  for (Int& x : v) x *= k;
  return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& x : c_) g = gcd_int(g, x);
  return g;
}

SymmetricLaurentPoly::SymmetricLaurentPoly(std::vector<Int> coeffs)
    : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  // A constant-zero vector [0] trims to the genuine zero polynomial.
}

Int SymmetricLaurentPoly::coeff(long k) const {
  long a = std::abs(k);
  if (a >= static_cast<long>(c_.size())) return Int(0);
  return c_[a];
}

const Int& SymmetricLaurentPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
  return c_.back();
}

IntPoly SymmetricLaurentPoly::to_int_poly() const {
  if (is_zero()) return IntPoly();
  long r = half_degree();
  std::vector<Int> v(2 * r + 1);
  for (long k = -r; k <= r; ++k) v[k + r] = coeff(k);
  return IntPoly(std::move(v));
}

Int SymmetricLaurentPoly::eval_minus_one() const {
  if (is_zero()) return Int(0);
  Int acc = c_[0];
  for (long k = 1; k <= half_degree(); ++k)
    acc += (k % 2 == 0 ? 2 : -2) * c_[k];
  return acc;
}

SymmetricLaurentPoly associated_poly(const genset::GenSet& gs) {
  long m = gs.betas().empty() ? 0 : gs.betas().back();
  // A(z) over exponents -m..m, stored with offset m.
  std::vector<Int> a(2 * m + 1);
  a[m] = gs.degree();
  for (long b : gs.betas()) {
    a[m + b] -= 1;
    a[m - b] -= 1;
  }
  // A(z) A(1/z) = A(z)^2 since A is palindromic.
  std::vector<Int> sq(4 * m + 1);
  for (long i = 0; i <= 2 * m; ++i)
    for (long j = 0; j <= 2 * m; ++j) sq[i + j] += a[i] * a[j];
  // Subtract B(z) B(1/z) = sum_{i,j} z^{gamma_i - gamma_j}; recenter so the
  // whole expression sits over exponents -w..w.
  const auto& gam = gs.gammas();
  long span = gam.back() - gam.front();
  long w = std::max(2 * m, span);
  std::vector<Int> p(2 * w + 1);
  for (long e = -2 * m; e <= 2 * m; ++e) p[w + e] = sq[2 * m + e];
  for (long i : gam)
    for (long j : gam) p[w + (i - j)] -= 1;
  // The result must be palindromic; fold to [c0..cw].
  std::vector<Int> c(w + 1);
  for (long k = 0; k <= w; ++k) {
    if (p[w + k] != p[w - k])
      throw std::logic_error("associated polynomial lost palindromy");
    c[k] = p[w + k];
  }
  return SymmetricLaurentPoly(std::move(c));
}

Int q_constant(const genset::GenSet& gs) {
  Int q(0);
  for (long b : gs.betas()) q += Int(b) * b;
  q *= 2 * gs.t();
  const auto& gam = gs.gammas();
  for (size_t j = 0; j < gam.size(); ++j)
    for (size_t k = j + 1; k < gam.size(); ++k) {
      Int d(gam[k] - gam[j]);
      q += d * d;
    }
  // Cross-check against -P''(1)/2 = -sum_k c_k k^2.
  SymmetricLaurentPoly p = associated_poly(gs);
  Int check(0);
  for (long k = 1; k <= p.half_degree(); ++k)
    check -= p.coeff(k) * k * k;
  if (check != q)
    throw std::logic_error("q does not match -P''(1)/2");
  if (q == 0)
    throw DegenerateFamily(
        "q = 0: no rotations and a single reflection leave a vanishing "
        "associated polynomial");
  return q;
}

IntPoly chebyshev_transform(const SymmetricLaurentPoly& p) {
  if (p.is_zero()) throw DegenerateFamily("associated polynomial is zero");
  long r = p.half_degree();
  std::vector<Int> q(r + 1);
  q[0] = p.coeff(0);
  // T_k by the recurrence, accumulated with weight 2 c_k.
  std::vector<Int> prev{Int(1)};           // T_0
  std::vector<Int> cur{Int(0), Int(1)};    // T_1
  for (long k = 1; k <= r; ++k) {
    Int w = 2 * p.coeff(k);
    for (size_t i = 0; i < cur.size(); ++i) q[i] += w * cur[i];
    if (k < r) {
      std::vector<Int> next(k + 2);
      for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
      for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return IntPoly(std::move(q));
}

Int resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero())
    throw ZeroPolynomial("resultant of a zero polynomial");
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    if (a.degree() == 0) return Int(1);
    Int r = pow_int(b.leading(), a.degree());
    return s == 1 ? r : Int(-r);
  }
  Int g(1), h(1);
  while (true) {
    long delta = a.degree() - b.degree();
    if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) s = -s;
    IntPoly rem = pseudo_rem(a, b);
    a = std::move(b);
    {
      // b <- rem / (g h^delta), an exact division in the subresultant PRS.
      Int div = g * pow_int(h, delta);
      std::vector<Int> v = rem.coeffs();
      for (Int& x : v) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(),
                    div.get_mpz_t());
        if (r != 0)
          throw std::logic_error("subresultant division was not exact");
        x = q;
      }
      b = IntPoly(std::move(v));
    }
    if (b.is_zero()) return Int(0);
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Int num = pow_int(g, delta);
      Int den = pow_int(h, delta - 1);
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                  den.get_mpz_t());
      if (r != 0) throw std::logic_error("subresultant h-update not exact");
      h = q;
    }
    if (b.degree() == 0) {
      // res = s * lc(b)^deg(a) / h^(deg(a) - 1).
      Int num = pow_int(b.leading(), a.degree());
      Int den = pow_int(h, a.degree() - 1);
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                  den.get_mpz_t());
      if (r != 0) throw std::logic_error("subresultant finish not exact");
      return s == 1 ? q : Int(-q);
    }
  }
}

double eval_unit_circle(const SymmetricLaurentPoly& p, double phi) {
  if (p.is_zero()) return 0.0;
  long double acc = mpz_get_d(p.coeff(0).get_mpz_t());
  for (long k = 1; k <= p.half_degree(); ++k) {
    long double ck = mpz_get_d(p.coeff(k).get_mpz_t());
    acc += 2.0L * ck * cosl(static_cast<long double>(k) * phi);
  }
  return static_cast<double>(acc);
}

LinearSolution ff_solve(std::vector<std::vector<Rat>> m,
                        std::vector<Rat> rhs) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<long> pivot_col_of_row(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[row]);
    std::swap(rhs[pr], rhs[row]);
    Rat inv = m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] /= inv;
    rhs[row] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col_of_row[row] = static_cast<long>(col);
    ++row;
  }
  LinearSolution sol;
  for (size_t i = row; i < rows; ++i) {
    if (rhs[i] != 0) {
      sol.consistent = false;
      return sol;
    }
  }
  sol.consistent = true;
  sol.unique = (row == cols);
  sol.x.assign(cols, Rat(0));
  for (size_t i = 0; i < row; ++i) sol.x[pivot_col_of_row[i]] = rhs[i];
  return sol;
}

Int det_bareiss(genset::IntegerMatrix m) {
  const long n = m.dim();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      long r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return Int(0);
      for (long j = 0; j < n; ++j) swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        Int q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rr != 0) throw std::logic_error("bareiss division not exact");
        m(i, j) = q;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign == 1 ? det : Int(-det);
}

IntPoly deflate_at_one(const IntPoly& p, long multiplicity) {
  std::vector<Int> c = p.coeffs();
  for (long pass = 0; pass < multiplicity; ++pass) {
    if (c.empty())
      throw DivisibilityViolation("deflating the zero polynomial");
    // Synthetic division by (z - 1): remainder is the value at 1.
    std::vector<Int> q(c.size() - 1);
    Int carry(0);
    for (size_t i = c.size(); i-- > 1;) {
      carry += c[i];
      q[i - 1] = carry;
    }
    if (carry + c[0] != 0)
      throw DivisibilityViolation("(z - 1) does not divide the polynomial");
    c = std::move(q);
  }
  return IntPoly(std::move(c));
}

namespace {

IntPoly primitive_signed(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = p.content();
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<Int> v = p.coeffs();
  for (Int& x : v) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    x = q;
  }
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_signed(a);
  b = primitive_signed(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly::constant(Int(1));
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_signed(r);
  }
  return a;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree())
    throw DivisibilityViolation("divisor degree exceeds dividend degree");
  std::vector<Rat> rem = to_rat(a.coeffs());
  std::vector<Rat> quot(a.degree() - b.degree() + 1);
  Rat lead = Rat(b.leading());
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[k + b.degree()] / lead;
    quot[k] = q;
    for (long i = 0; i <= b.degree(); ++i) rem[k + i] -= q * Rat(b.coeff(i));
  }
  for (const Rat& r : rem)
    if (r != 0) throw DivisibilityViolation("polynomial division not exact");
  std::vector<Int> out(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    if (quot[i].get_den() != 1)
      throw DivisibilityViolation("polynomial quotient not integral");
    out[i] = quot[i].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace dihedral::polyalg
