#include "tsl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tsl/config.hpp"
#include "tsl/errors.hpp"

namespace tsl::oracle {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Gershgorin bounds for a symmetric tridiagonal matrix.
std::pair<double, double> gershgorin(std::span<const double> diag,
                                     std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

}  // namespace

int sturm_count_below(std::span<const double> diag,
                      std::span<const double> offdiag, double t) {
  const std::size_t n = diag.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i > 0 ? offdiag[i - 1] * offdiag[i - 1] : 0.0;
    q = diag[i] - t - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) {
      // Exact zero pivot: nudge off the singularity, standard bisection
      // safeguard.
      q = -std::numeric_limits<double>::min();
    }
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double abs_tol) {
  const int n = static_cast<int>(diag.size());
  auto [lo, hi] = gershgorin(diag, offdiag);
  // Widen so that strict counts at the ends are 0 and n.
  const double pad = std::max(abs_tol, 1e-12 * (std::abs(lo) + std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // k-th smallest eigenvalue: bisect for count_below <= k / > k.
    double a = lo;
    double b = hi;
    for (int iter = 0; iter < 200 && (b - a) > abs_tol; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;  // interval at rounding resolution
      if (sturm_count_below(diag, offdiag, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[static_cast<std::size_t>(k)] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> dense_eigenvalues(const SttMatrix& m) {
  if (m.n > kDenseSizeCap) {
    throw ResourceError("oracle eigensolver capped at n <= " +
                        std::to_string(kDenseSizeCap) + ", got n=" +
                        std::to_string(m.n));
  }
  const std::vector<double> diag(static_cast<std::size_t>(m.n), m.delta);
  const std::vector<double> off(static_cast<std::size_t>(m.n - 1), m.sigma);
  const double tol =
      1e-12 * (std::abs(m.delta) + 2.0 * std::abs(m.sigma) + 1.0);
  return tridiagonal_eigenvalues(diag, off, tol);
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
  if (!a.square()) {
    throw DomainError("symmetric_eigenvalues requires a square matrix");
  }
  const int n = a.rows();
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0.0);
  if (n == 1) {
    return {a(0, 0)};
  }

  // Householder reduction to tridiagonal form, working in place on the
  // lower triangle; eigenvector accumulation is not needed.
  std::vector<double> v(static_cast<std::size_t>(n));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n - 2; ++k) {
    double norm2 = 0.0;
    for (int i = k + 1; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double alpha_norm = std::sqrt(norm2);
    if (alpha_norm == 0.0) continue;

    const double akk1 = a(k + 1, k);
    const double beta = akk1 >= 0.0 ? -alpha_norm : alpha_norm;
    // v = column below the diagonal with the leading entry shifted.
    double vnorm2 = norm2 - 2.0 * akk1 * beta + beta * beta;
    if (vnorm2 == 0.0) continue;
    for (int i = k + 1; i < n; ++i)
      v[static_cast<std::size_t>(i)] = a(i, k);
    v[static_cast<std::size_t>(k + 1)] -= beta;

    // p = 2 A v / ||v||^2 restricted to the trailing block, then
    // A <- A - v w^T - w v^T with w = p - (v^T p / ||v||^2) v.
    const double inv = 2.0 / vnorm2;
    double vtp = 0.0;
    for (int i = k + 1; i < n; ++i) {
      double sum = 0.0;
      for (int j = k + 1; j < n; ++j)
        sum += a(std::max(i, j), std::min(i, j)) *
               v[static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)] = sum * inv;
      vtp += v[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    }
    const double coeff = vtp / vnorm2;
    for (int i = k + 1; i < n; ++i)
      p[static_cast<std::size_t>(i)] -= coeff * v[static_cast<std::size_t>(i)];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j)
        a(i, j) -= v[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)] +
                   p[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    a(k + 1, k) = beta;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }

  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = a(i, i);
  for (int i = 0; i + 1 < n; ++i)
    off[static_cast<std::size_t>(i)] = a(i + 1, i);

  double scale = 0.0;
  for (double d : diag) scale = std::max(scale, std::abs(d));
  for (double e : off) scale = std::max(scale, std::abs(e));
  return tridiagonal_eigenvalues(diag, off, 1e-13 * (scale + 1.0));
}

SttProjection project_to_stt(const Matrix& a) {
  if (!a.square()) {
    throw DomainError("project_to_stt requires a square matrix");
  }
  const int n = a.rows();
  if (n < 2) {
    throw DomainError("project_to_stt requires n >= 2, got n=" +
                      std::to_string(n));
  }
  double d = 0.0;
  for (int i = 0; i < n; ++i) d += a(i, i);
  d /= n;
  double s = 0.0;
  for (int i = 0; i + 1 < n; ++i) s += a(i, i + 1) + a(i + 1, i);
  s /= 2.0 * (n - 1);
  const double fro = std::sqrt(n * d * d + 2.0 * (n - 1) * s * s);
  return {n, d, s, fro};
}

std::pair<double, double> grid_optimal_singular(const SttMatrix& m, int h) {
  if (h < 1 || h > m.n) {
    throw DomainError("index h=" + std::to_string(h) + " out of range 1.." +
                      std::to_string(m.n));
  }
  const int n = m.n;
  const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
  const auto objective = [&](double s) {
    const double dd = m.delta + 2.0 * c * s;  // delta - (-2cs)
    const double ds = m.sigma - s;
    return n * dd * dd + 2.0 * (n - 1) * ds * ds;
  };

  const double bound = 2.0 * (std::abs(m.sigma) + std::abs(m.delta)) + 1.0;
  // Coarse grid to seed the bracket.
  const int grid_points = 2001;
  double best_s = -bound;
  double best_f = objective(best_s);
  for (int i = 1; i < grid_points; ++i) {
    const double s = -bound + 2.0 * bound * i / (grid_points - 1);
    const double f = objective(s);
    if (f < best_f) {
      best_f = f;
      best_s = s;
    }
  }
  const double step = 2.0 * bound / (grid_points - 1);
  double a = best_s - step;
  double b = best_s + step;

  while (b - a > 1e-10 * (1.0 + std::abs(best_s))) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (objective(m1) < objective(m2)) {
      b = m2;
    } else {
      a = m1;
    }
  }

  // The objective is an exact parabola, so a three-point vertex fit
  // removes the remaining ternary-search slack.
  const double mid = 0.5 * (a + b);
  const double hstep = std::max(1e-7, 1e-7 * std::abs(mid));
  const double f0 = objective(mid - hstep);
  const double f1 = objective(mid);
  const double f2 = objective(mid + hstep);
  double s_opt = mid;
  const double curvature = f0 - 2.0 * f1 + f2;
  if (curvature > 0.0) {
    s_opt = mid - hstep * (f2 - f0) / (2.0 * curvature);
  }
  return {s_opt, std::sqrt(objective(s_opt))};
}

Matrix eckart_young_dropped(const SttMatrix& m, int k) {
  if (k < 1 || k > m.n) {
    throw DomainError("index k=" + std::to_string(k) + " out of range 1.." +
                      std::to_string(m.n));
  }
  const int n = m.n;
  Matrix s(n, n);
  for (int h = 1; h <= n; ++h) {
    if (h == k) continue;
    const double lambda = eigenvalue(m, h);
    const std::vector<double> x = eigenvector(m, h);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s(i, j) += lambda * x[static_cast<std::size_t>(i)] *
                   x[static_cast<std::size_t>(j)];
  }
  return s;
}

std::vector<double> tridiagonal_solve(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 != n || rhs.size() != n) {
    throw DomainError("tridiagonal_solve: inconsistent sizes");
  }
  if (n == 1) return {rhs[0] / diag[0]};
  std::vector<double> c(n - 1);
  std::vector<double> x(rhs.begin(), rhs.end());
  double pivot = diag[0];
  c[0] = offdiag[0] / pivot;
  x[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - offdiag[i - 1] * c[i - 1];
    if (i < n - 1) c[i] = offdiag[i] / pivot;
    x[i] = (x[i] - offdiag[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] -= c[i] * x[i + 1];
  }
  return x;
}

}  // namespace tsl::oracle
