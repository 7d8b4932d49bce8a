#pragma once

#include <utility>
#include <vector>

#include "tsl/config.hpp"
#include "tsl/sensitivity.hpp"
#include "tsl/stt.hpp"

namespace tsl {

/// Symmetric tridiagonal Toeplitz matrix (n; delta_star, sigma_star)
/// whose h-th eigenvalue is zero, closest in Frobenius norm to the
/// input among all such matrices, together with that distance.
struct SingularCandidate {
  int h;
  double delta_star;
  double sigma_star;
  double distance_f;
};

/// Full nearness report: structured and unstructured distance to
/// singularity, all minimizing indices, uniqueness, definiteness, and
/// spectral-norm bounds.
struct NearestSingularReport {
  int n;
  double delta;
  double sigma;
  std::vector<SingularCandidate> minimizers;
  double structured_distance_f;
  bool unique;
  double unstructured_distance;
  std::vector<int> unstructured_minimizer_indices;
  double spectral_lower;
  double spectral_upper;
  bool definite;
};

/// Indices attaining the minimum of `values`, where two entries tie
/// when their relative difference is at most tie_rtol. Returned
/// 1-based, ascending.
std::vector<int> argmin_indices(const std::vector<double>& values,
                                double tie_rtol = kDefaultTieRtol);

/// Frobenius (= spectral) distance to the nearest singular matrix,
/// min_h |lambda_h|, with every index attaining it (one, or two for a
/// magnitude tie). A singular input yields 0 with its null indices.
std::pair<double, std::vector<int>> unstructured_distance(
    const SttMatrix& m, double tie_rtol = kDefaultTieRtol);

/// Closest structured matrix with null h-th eigenvalue. With
/// c = cos(h pi/(n+1)):
///
///   delta_star = 2 (n c^2 delta - (n-1) c sigma) / (n-1 + 2 n c^2)
///   sigma_star = ((n-1) sigma - n c delta)       / (n-1 + 2 n c^2)
///
/// at distance |delta + 2 c sigma| / sqrt(1/n + 2 c^2/(n-1)), which is
/// |lambda_h| / kappa(n, h). Coincides entrywise with the rank-one
/// correction T - lambda_h P / ||P||_F^2, P = project_rank_one(m, h).
SingularCandidate nearest_singular_fixed_index(const SttMatrix& m, int h);

/// Structured distance to singularity: scans the ratios
/// |lambda_h| / kappa(n, h) over all h, reports every tied minimizer
/// with its candidate matrix, uniqueness, definiteness, and the
/// spectral-norm bracket. Requires sigma != 0
/// (UnsupportedStructureError otherwise).
NearestSingularReport structured_distance(const SttMatrix& m,
                                          double tie_rtol = kDefaultTieRtol);

/// Bracket for the structured spectral-norm distance when h minimizes
/// the ratio |lambda|/kappa:
///
///   lower = min_k |lambda_k|
///   upper = |lambda_h| (n-1 + 2n|c| cos(pi/(n+1))) / (n-1 + 2n c^2).
std::pair<double, double> spectral_bounds(const SttMatrix& m, int h);

enum class TieCase {
  SingularZeroDiagonal,   // delta = 0, n odd: already singular
  ZeroDiagonalEvenPair,   // delta = 0, n even: the +/- minimizer pair
  NonzeroDiagonal,        // delta != 0
};

/// Classification of tie structure for the two minimization problems.
struct TieReport {
  TieCase classification;
  std::vector<int> magnitude_minimizers;
  std::vector<int> ratio_minimizers;
  bool magnitude_unique;
  bool ratio_unique;
  bool coincide;   // identical index sets for both problems
  bool ties_valid; // every tie pair is consecutive, opposite-sign, same half
  double unstructured_distance;
  double structured_distance;
};

TieReport tie_analysis(const SttMatrix& m, double tie_rtol = kDefaultTieRtol);

/// Asymptotic behaviour of the discrete Laplacian family (n; 2, -1):
/// lambda_1 ~ pi^2/n^2, ratio ~ pi^2/(sqrt(3) n^{3/2}), and the nearest
/// structured singular matrix drifting to (2, -1) itself.
struct LaplacianAsymptotics {
  int n;
  double lambda1;
  double lambda1_scaled;  // lambda_1 n^2 / pi^2           -> 1
  double ratio;           // lambda_1 / kappa(n, 1)
  double ratio_scaled;    // ratio n^{3/2} sqrt(3) / pi^2  -> 1
  double delta_star;      // -> 2
  double sigma_star;      // -> -1
  double distance_ratio;  // d_F / d_F^T = kappa(n, 1)
  double sqrt_3_over_n;   // its large-n estimate
};

LaplacianAsymptotics laplacian_asymptotics(int n);

/// Asymptotics for the zero-diagonal even-dimension family (n; 0, sigma):
/// d_F of order 1/n, structured distance of order 1/sqrt(n), and the two
/// tied minimizers approaching (0, sigma).
struct ZeroDiagAsymptotics {
  int n;
  double sigma;
  double d_f;                    // 2|sigma| cos(n pi / (2(n+1)))
  double d_f_structured;
  SingularCandidate minimizer_low;   // h = n/2
  SingularCandidate minimizer_high;  // h = n/2 + 1
  double ratio_times_sqrt_n;     // (d_F/d_F^T) sqrt(n) -> 1
};

ZeroDiagAsymptotics zero_diag_asymptotics(int n, double sigma);

}  // namespace tsl
