#pragma once

#include <vector>

#include "tsl/config.hpp"
#include "tsl/matrix.hpp"

namespace tsl {

/// Symmetric tridiagonal Toeplitz matrix (n; delta, sigma): constant
/// diagonal delta, constant first sub/super-diagonal sigma.
///
/// A plain immutable value; the dense realization is produced on demand
/// by dense(). Construction requires n >= 2 (a 1x1 "matrix" has no
/// off-diagonal and none of the structure theory applies).
struct SttMatrix {
  SttMatrix(int n, double delta, double sigma);

  int n;
  double delta;
  double sigma;
};

/// Closed-form h-th eigenvalue (1-based index),
///
///   lambda_h = delta + 2 sigma cos(h pi / (n+1)),   h = 1..n.
///
/// Indexing follows the decreasing-cosine convention, not magnitude
/// order. The angle is evaluated as h*pi/(n+1) in a single
/// multiply-divide so that the symmetry lambda_h + lambda_{n+1-h} =
/// 2 delta holds tightly in floating point.
double eigenvalue(const SttMatrix& m, int h);

/// All n eigenvalues in index order h = 1..n.
std::vector<double> eigenvalues(const SttMatrix& m);

double smallest_eigenvalue(const SttMatrix& m);
double largest_eigenvalue(const SttMatrix& m);

/// Unit-norm h-th eigenvector; component k (1-based) is
///
///   x_{h,k} = sqrt(2/(n+1)) sin(h k pi / (n+1)).
///
/// Depends only on (n, h); identical output for any delta, sigma.
std::vector<double> eigenvector(const SttMatrix& m, int h);

struct EigenPair {
  int h;
  double lambda;
  std::vector<double> x;
};

/// Full spectrum, indexed h = 1..n. `simple` is false when sigma == 0:
/// the eigenvalue delta then repeats n times and downstream distance
/// theory does not apply, though the formula eigenvectors are still
/// returned.
struct Spectrum {
  std::vector<EigenPair> pairs;
  bool simple = true;
};

Spectrum spectrum(const SttMatrix& m);

/// Dense realization. Guarded by a size cap; throws ResourceError when
/// n exceeds it.
Matrix dense(const SttMatrix& m, int size_cap = kDenseSizeCap);

}  // namespace tsl
