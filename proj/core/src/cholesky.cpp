#include "tsl/cholesky.hpp"

#include <cmath>
#include <string>

#include "tsl/errors.hpp"

namespace tsl {

namespace {

bool sign_matches(double value, double reference) {
  if (reference > 0.0) return value > 0.0;
  if (reference < 0.0) return value < 0.0;
  return value == 0.0;
}

}  // namespace

CholeskyFactor cholesky_factor(const SttMatrix& m) {
  const double lambda_min = smallest_eigenvalue(m);
  const double lambda_max = largest_eigenvalue(m);

  CholeskyFactor f;
  double d = m.delta;
  double s = m.sigma;
  if (lambda_min > 0.0) {
    f.negated = false;
  } else if (lambda_max < 0.0) {
    f.negated = true;
    d = -d;
    s = -s;
  } else {
    throw NotPositiveDefiniteError(
        "matrix is not definite: eigenvalue " + std::to_string(lambda_min) +
            " is not positive and " + std::to_string(lambda_max) +
            " is not negative",
        lambda_min);
  }

  const int n = m.n;
  f.diag.resize(static_cast<std::size_t>(n));
  f.super.resize(static_cast<std::size_t>(n - 1));
  f.diag[0] = std::sqrt(d);
  for (int i = 2; i <= n; ++i) {
    const double off = s / f.diag[static_cast<std::size_t>(i - 2)];
    f.super[static_cast<std::size_t>(i - 2)] = off;
    f.diag[static_cast<std::size_t>(i - 1)] = std::sqrt(d - off * off);
  }
  return f;
}

MonotonicityReport monotonicity_report(const CholeskyFactor& f,
                                       const SttMatrix& m) {
  const int n = f.n();
  const double d = f.negated ? -m.delta : m.delta;
  const double s = f.negated ? -m.sigma : m.sigma;

  MonotonicityReport rep{};
  rep.diag_nonincreasing = true;
  rep.super_sign_matches_sigma = true;
  rep.super_magnitude_nondecreasing = true;
  rep.dominance_regime = d >= 2.0 * std::abs(s);
  rep.dominance_holds = true;

  for (int i = 2; i <= n; ++i) {
    const double prev = f.diag[static_cast<std::size_t>(i - 2)];
    const double cur = f.diag[static_cast<std::size_t>(i - 1)];
    if (!(prev >= cur && cur > 0.0)) {
      rep.diag_nonincreasing = false;
      rep.diag_violation_index = i;
      break;
    }
  }

  for (int i = 2; i <= n; ++i) {
    if (!sign_matches(f.super[static_cast<std::size_t>(i - 2)], s)) {
      rep.super_sign_matches_sigma = false;
      rep.sign_violation_index = i;
      break;
    }
  }

  for (int i = 2; i <= n - 1; ++i) {
    const double lo = std::abs(f.super[static_cast<std::size_t>(i - 2)]);
    const double hi = std::abs(f.super[static_cast<std::size_t>(i - 1)]);
    if (!(lo <= hi)) {
      rep.super_magnitude_nondecreasing = false;
      rep.magnitude_violation_index = i;
      break;
    }
  }

  if (rep.dominance_regime) {
    for (int i = 2; i <= n; ++i) {
      const double off = std::abs(f.super[static_cast<std::size_t>(i - 2)]);
      if (!(f.diag[static_cast<std::size_t>(i - 2)] > off &&
            f.diag[static_cast<std::size_t>(i - 1)] > off)) {
        rep.dominance_holds = false;
        rep.dominance_violation_index = i;
        break;
      }
    }
  }
  return rep;
}

double laplacian_inverse_entry(int n, int i, int j) {
  if (n < 2 || i < 1 || i > n || j < 1 || j > n) {
    throw DomainError("laplacian_inverse_entry: indices (" +
                      std::to_string(i) + "," + std::to_string(j) +
                      ") out of range for n=" + std::to_string(n));
  }
  if (i > j) std::swap(i, j);
  return static_cast<double>(i) * (n - j + 1) / (n + 1);
}

Matrix inverse_factor(const CholeskyFactor& f) {
  const int n = f.n();
  Matrix z(n, n);
  // Column by column, bottom up: R z = e_j.
  for (int j = n - 1; j >= 0; --j) {
    z(j, j) = 1.0 / f.diag[static_cast<std::size_t>(j)];
    for (int i = j - 1; i >= 0; --i) {
      z(i, j) = -f.super[static_cast<std::size_t>(i)] * z(i + 1, j) /
                f.diag[static_cast<std::size_t>(i)];
    }
  }
  return z;
}

InversePatternReport inverse_pattern_report(const CholeskyFactor& f) {
  const Matrix z = inverse_factor(f);
  const int n = f.n();

  InversePatternReport rep{};
  rep.use_absolute_values =
      !f.super.empty() && f.super.front() > 0.0;
  const auto value = [&](int i, int j) {
    return rep.use_absolute_values ? std::abs(z(i, j)) : z(i, j);
  };

  rep.entries_positive = true;
  for (int i = 0; i < n && rep.entries_positive; ++i)
    for (int j = i; j < n; ++j)
      if (!(value(i, j) > 0.0)) {
        rep.entries_positive = false;
        break;
      }

  rep.rows_decreasing = true;
  for (int i = 0; i < n && rep.rows_decreasing; ++i)
    for (int j = i; j + 1 < n; ++j)
      if (!(value(i, j) >= value(i, j + 1))) {
        rep.rows_decreasing = false;
        break;
      }

  rep.diagonals_increasing = true;
  for (int k = 0; k < n && rep.diagonals_increasing; ++k)
    for (int i = 0; i + 1 + k < n; ++i)
      if (!(value(i, i + k) <= value(i + 1, i + 1 + k))) {
        rep.diagonals_increasing = false;
        break;
      }

  return rep;
}

}  // namespace tsl
