#pragma once

#include <optional>
#include <vector>

#include "dihedral/genset.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral::treecount {

// Relative tolerance the floating engines must meet against the exact count
// (connected, graph-valid instances).
inline constexpr double kSpectralRelTol = 1e-9;
inline constexpr double kChebyshevRelTol = 1e-6;

struct TreeCountReport {
  long n = 0;
  Int tau_exact;                  // resultant engine, exact
  std::optional<Int> tau_oracle;  // Kirchhoff determinant; connected graph-valid only
  double tau_spectral = 0.0;
  double tau_chebyshev = 0.0;
  bool engines_agree = false;
  bool connected = false;
  bool graph_valid = false;
};

struct SpectrumPair {
  long j = 0;
  double lambda1 = 0.0;  // lambda1 >= lambda2
  double lambda2 = 0.0;
};

// Exact spanning-tree count through the resultant of (z^n - 1)/(z - 1)
// against z^r P(z): tau = |t * res| / n, with the divisibility asserted.
// Returns 0 for disconnected pairs.  Throws DegenerateFamily when P = 0 and
// DivisibilityViolation if n fails to divide exactly.
Int tau_exact(const genset::GenSet& gs, long n);

// Independent exact count: Kirchhoff cofactor (Laplacian with the last row
// and column deleted) by fraction-free elimination.  Requires a graph-valid
// connected pair; throws InvalidParameters or Disconnected.
Int tau_oracle(const genset::GenSet& gs, long n);

// Floating product (t/n) prod_{j=1}^{n-1} P(e^{2 pi i j / n}).  Accumulated
// in log space; relative accuracy target 1e-9 for n <= 1000 with moderate
// coefficients.
double tau_spectral(const genset::GenSet& gs, long n);
double tau_spectral_log2(const genset::GenSet& gs, long n);

// Floating closed form (n t |eta|^n / q) prod_p |2 T_n(w_p) - 2| over the
// roots w_p != 1 of the Chebyshev companion Q.  T_n by the three-term
// recurrence below n = 300, by the dominant-branch magnitude in log space
// above (guards overflow for large n).
double tau_chebyshev(const genset::GenSet& gs, long n);
double tau_chebyshev_log2(const genset::GenSet& gs, long n);

// Laplacian eigenvalues in conjugate pairs: for each j the two roots
// A(e^{2 pi i j/n}) +- |B(e^{2 pi i j/n})|, ordered lambda1 >= lambda2.
// The j = 0 pair is (2t, 0).
std::vector<SpectrumPair> spectrum(const genset::GenSet& gs, long n);

// Runs every applicable engine and cross-checks them.  For disconnected
// pairs the closed forms return 0; engines_agree then just records
// tau_exact == 0 (the floating engines only see cancellation noise there).
TreeCountReport report(const genset::GenSet& gs, long n);

}  // namespace dihedral::treecount
