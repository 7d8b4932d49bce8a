#pragma once

#include <vector>

#include "tsl/matrix.hpp"
#include "tsl/stt.hpp"

namespace tsl {

/// Upper bidiagonal Cholesky factor R of a positive definite symmetric
/// tridiagonal Toeplitz matrix, T = R^T R. Negative definite inputs are
/// factored as -T and flagged via `negated`.
struct CholeskyFactor {
  std::vector<double> diag;   // r_{i,i},   i = 1..n
  std::vector<double> super;  // r_{i,i+1}, i = 1..n-1
  bool negated = false;

  int n() const { return static_cast<int>(diag.size()); }
};

/// Factor by the forward recurrence
///
///   r_{1,1} = sqrt(delta),
///   r_{i-1,i} = sigma / r_{i-1,i-1},
///   r_{i,i} = sqrt(delta - r_{i-1,i}^2).
///
/// Definiteness is decided beforehand from the closed-form extremal
/// eigenvalues (delta -+ 2|sigma| cos(pi/(n+1))), so the recurrence
/// cannot break down; indefinite or singular input throws
/// NotPositiveDefiniteError carrying the offending eigenvalue.
CholeskyFactor cholesky_factor(const SttMatrix& m);

/// Structural properties of the factor entries. Violation indices are
/// 1-based positions of the first offending i, or 0 when the property
/// holds (or is vacuous).
struct MonotonicityReport {
  bool diag_nonincreasing;            // r_{i-1,i-1} >= r_{i,i} > 0
  int diag_violation_index;
  bool super_sign_matches_sigma;      // sign(r_{i-1,i}) = sign(sigma)
  int sign_violation_index;
  bool super_magnitude_nondecreasing; // |r_{i-1,i}| <= |r_{i,i+1}|
  int magnitude_violation_index;
  bool dominance_regime;              // delta >= 2|sigma|
  bool dominance_holds;               // r_{i-1,i-1} > |r_{i-1,i}|, r_{i,i} > |r_{i-1,i}|
  int dominance_violation_index;
};

/// The factor must come from `m` (or its negation when flagged).
MonotonicityReport monotonicity_report(const CholeskyFactor& f,
                                       const SttMatrix& m);

/// Entry (i, j), 1-based, of the inverse of the discrete Laplacian
/// family (n; 2, -1):  i (n - j + 1) / (n + 1) for i <= j, symmetric
/// extension otherwise.
double laplacian_inverse_entry(int n, int i, int j);

/// R^{-1} by back-substitution on the bidiagonal factor (upper
/// triangular; no general inversion).
Matrix inverse_factor(const CholeskyFactor& f);

/// Empirical pattern diagnostics for R^{-1}: positivity of the
/// structure entries (sign-adjusted when the off-diagonal of T is
/// positive), row-wise decay with increasing column, and diagonal-wise
/// growth with increasing row. Reported, not asserted; the (n; 2, -1)
/// family is the one place the tests pin them down.
struct InversePatternReport {
  bool use_absolute_values;   // true when the factor's super entries are positive
  bool entries_positive;      // structure entries (or their magnitudes) > 0
  bool rows_decreasing;
  bool diagonals_increasing;
};

InversePatternReport inverse_pattern_report(const CholeskyFactor& f);

}  // namespace tsl
