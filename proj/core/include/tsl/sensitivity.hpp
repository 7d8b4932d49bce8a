#pragma once

#include <vector>

#include "tsl/stt.hpp"

namespace tsl {

/// A symmetric tridiagonal Toeplitz triple arising as the projection of
/// some matrix onto the structure subspace: diagonal value d,
/// off-diagonal value s, plus the Frobenius norm of its realization,
///   fro_norm^2 = n d^2 + 2 (n-1) s^2.
struct SttProjection {
  int n;
  double d;
  double s;
  double fro_norm;
};

/// Projection of the rank-one eigenvector outer product x_h x_h^T onto
/// the structure subspace, in closed form:
///
///   d = 1/n,   s = cos(h pi/(n+1)) / (n-1).
///
/// Its Frobenius norm equals the structured condition number of
/// lambda_h. The generic diagonal-averaging projection of an arbitrary
/// dense matrix lives in oracle::project_to_stt and cross-validates
/// this fast path.
SttProjection project_rank_one(const SttMatrix& m, int h);

/// Structured condition number of the h-th eigenvalue,
///
///   kappa(n, h) = sqrt( 1/n + 2 cos^2(h pi/(n+1)) / (n-1) ).
///
/// Independent of delta and sigma; lies in (0, 1].
double structured_condition_number(int n, int h);

/// Unit-Frobenius-norm structure-preserving perturbation that maximizes
/// the first-order displacement of lambda_h: project_rank_one scaled by
/// the inverse of its norm.
SttProjection worst_case_perturbation(const SttMatrix& m, int h);

/// Per-eigenvalue conditioning summary. For real symmetric matrices
/// with unit-norm eigenvectors the unstructured condition number is 1,
/// so the ratio kappa_structured/kappa_unstructured equals
/// kappa_structured.
struct ConditionReport {
  int h;
  double kappa_structured;
  double kappa_unstructured;
  double ratio;
};

ConditionReport condition_report(int n, int h);

/// Smallest and largest structured condition numbers over h = 1..n,
/// with the index sets attaining them and the large-n estimates
/// sqrt(1/n) and sqrt(3/n) as annotations.
struct ConditionExtremes {
  std::vector<int> min_indices;  // (n+1)/2, or {n/2, n/2+1} for even n
  double kappa_min;
  double min_estimate;  // sqrt(1/n)
  std::vector<int> max_indices;  // {1, n}
  double kappa_max;
  double max_estimate;  // sqrt(3/n)
  double max_min_ratio;
};

ConditionExtremes condition_extremes(int n);

}  // namespace tsl
