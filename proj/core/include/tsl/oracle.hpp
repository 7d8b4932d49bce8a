#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tsl/matrix.hpp"
#include "tsl/sensitivity.hpp"
#include "tsl/stt.hpp"

/// Brute-force validation machinery. Everything here is deliberately
/// independent of the closed forms it is used to check: eigenvalues by
/// Sturm-count bisection, structure projection by explicit averaging,
/// optimal singular parameters by 1-D minimization.
namespace tsl::oracle {

/// Number of eigenvalues of the symmetric tridiagonal matrix
/// (diag, offdiag) that are strictly below t, from the sign count of
/// the shifted LDL^T pivot sequence
///
///   q_1 = d_1 - t,  q_i = d_i - t - e_{i-1}^2 / q_{i-1}.
int sturm_count_below(std::span<const double> diag,
                      std::span<const double> offdiag, double t);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, by
/// bisection on the Sturm counts inside the Gershgorin interval. Each
/// eigenvalue is located to abs_tol (plus a few ulps of the interval).
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double abs_tol);

/// Sturm-bisection eigenvalues of the dense realization of m, sorted
/// ascending, never touching the closed form. Capped at n <= 4096
/// (ResourceError beyond). Accuracy 1e-12 (|delta| + 2|sigma| + 1).
std::vector<double> dense_eigenvalues(const SttMatrix& m);

/// Eigenvalues of a dense symmetric matrix: Householder reduction to
/// tridiagonal form followed by the Sturm bisection above. Sorted
/// ascending.
std::vector<double> symmetric_eigenvalues(Matrix a);

/// Projection of an arbitrary square matrix onto the structure
/// subspace: symmetrize, then replace each structure diagonal by its
/// arithmetic mean. d is the mean of the diagonal entries, s the mean
/// over the pooled 2(n-1) sub- and super-diagonal entries; everything
/// outside the three central diagonals is discarded.
SttProjection project_to_stt(const Matrix& a);

/// Minimizer over s of || T - (n; -2cs, s) ||_F, the one-parameter
/// family of structured matrices with null h-th eigenvalue
/// (c = cos(h pi/(n+1))). The objective is evaluated explicitly and
/// minimized by coarse grid + ternary refinement (the objective is an
/// upward parabola in s, so the bracket [-B, B], B = 2(|sigma| +
/// |delta|) + 1 suffices), with a final parabola-vertex polish.
/// Returns (s_opt, distance).
std::pair<double, double> grid_optimal_singular(const SttMatrix& m, int h);

/// Best Frobenius approximation of T among matrices whose k-th spectral
/// component is removed (Eckart-Young): sum over h != k of
/// lambda_h x_h x_h^T, assembled densely.
Matrix eckart_young_dropped(const SttMatrix& m, int k);

/// Thomas-algorithm solve of a symmetric tridiagonal system
/// (diag, offdiag) x = rhs. No pivoting; intended for the diagonally
/// dominant families used in the checks.
std::vector<double> tridiagonal_solve(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      std::span<const double> rhs);

}  // namespace tsl::oracle
