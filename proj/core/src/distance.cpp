#include "tsl/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tsl/errors.hpp"

namespace tsl {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

bool tied(double a, double b, double rtol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return true;
  return std::abs(a - b) <= rtol * scale;
}

void require_sigma_nonzero(const SttMatrix& m, const char* op) {
  if (m.sigma == 0.0) {
    throw UnsupportedStructureError(
        std::string(op) + " requires sigma != 0; the matrix is " +
        "diagonal and the structure theory does not apply");
  }
}

std::vector<double> magnitudes(const SttMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.n));
  for (int h = 1; h <= m.n; ++h)
    out[static_cast<std::size_t>(h - 1)] = std::abs(eigenvalue(m, h));
  return out;
}

std::vector<double> ratios(const SttMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.n));
  for (int h = 1; h <= m.n; ++h) {
    out[static_cast<std::size_t>(h - 1)] =
        std::abs(eigenvalue(m, h)) / structured_condition_number(m.n, h);
  }
  return out;
}

// One tie pair is structurally valid when its indices are consecutive,
// the eigenvalues have opposite signs, and both indices lie in the same
// monotonicity half of 1..n.
bool tie_pair_valid(const SttMatrix& m, const std::vector<int>& idx) {
  if (idx.size() != 2) return false;
  const int k1 = idx[0];
  const int k2 = idx[1];
  if (k2 - k1 != 1) return false;
  const double l1 = eigenvalue(m, k1);
  const double l2 = eigenvalue(m, k2);
  if (!(l1 * l2 < 0.0)) return false;
  const int n = m.n;
  if (n % 2 == 0) {
    const bool low = k1 >= 1 && k2 <= n / 2;
    const bool high = k1 >= n / 2 + 1 && k2 <= n;
    return low || high;
  }
  const int center = (n + 1) / 2;
  const bool low = k1 >= 1 && k2 <= center;
  const bool high = k1 >= center && k2 <= n;
  return low || high;
}

}  // namespace

std::vector<int> argmin_indices(const std::vector<double>& values,
                                double tie_rtol) {
  std::vector<int> out;
  if (values.empty()) return out;
  const double vmin = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (tied(values[i], vmin, tie_rtol)) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::pair<double, std::vector<int>> unstructured_distance(const SttMatrix& m,
                                                          double tie_rtol) {
  const std::vector<double> mags = magnitudes(m);
  std::vector<int> idx = argmin_indices(mags, tie_rtol);
  return {mags[static_cast<std::size_t>(idx.front() - 1)], std::move(idx)};
}

SingularCandidate nearest_singular_fixed_index(const SttMatrix& m, int h) {
  if (h < 1 || h > m.n) {
    throw DomainError("index h=" + std::to_string(h) + " out of range 1.." +
                      std::to_string(m.n));
  }
  const double lambda = eigenvalue(m, h);
  if (lambda == 0.0) return {h, m.delta, m.sigma, 0.0};

  const int n = m.n;
  const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
  const double denom = (n - 1) + 2.0 * n * c * c;
  const double delta_star =
      2.0 * (n * c * c * m.delta - (n - 1) * c * m.sigma) / denom;
  const double sigma_star = ((n - 1) * m.sigma - n * c * m.delta) / denom;
  const double dist = std::abs(m.delta + 2.0 * c * m.sigma) /
                      std::sqrt(1.0 / n + 2.0 * c * c / (n - 1));
  return {h, delta_star, sigma_star, dist};
}

NearestSingularReport structured_distance(const SttMatrix& m,
                                          double tie_rtol) {
  require_sigma_nonzero(m, "structured_distance");

  NearestSingularReport report;
  report.n = m.n;
  report.delta = m.delta;
  report.sigma = m.sigma;

  const std::vector<double> mags = magnitudes(m);
  report.unstructured_minimizer_indices = argmin_indices(mags, tie_rtol);
  report.unstructured_distance =
      mags[static_cast<std::size_t>(
          report.unstructured_minimizer_indices.front() - 1)];

  const std::vector<double> rat = ratios(m);
  const std::vector<int> min_idx = argmin_indices(rat, tie_rtol);
  report.structured_distance_f =
      rat[static_cast<std::size_t>(min_idx.front() - 1)];
  report.unique = min_idx.size() == 1;
  for (int h : min_idx)
    report.minimizers.push_back(nearest_singular_fixed_index(m, h));

  const double lo = eigenvalue(m, 1);
  const double hi = eigenvalue(m, m.n);
  report.definite = (lo > 0.0 && hi > 0.0) || (lo < 0.0 && hi < 0.0);

  report.spectral_lower = report.unstructured_distance;
  double upper = std::numeric_limits<double>::infinity();
  for (int h : min_idx)
    upper = std::min(upper, spectral_bounds(m, h).second);
  report.spectral_upper = upper;
  return report;
}

std::pair<double, double> spectral_bounds(const SttMatrix& m, int h) {
  if (h < 1 || h > m.n) {
    throw DomainError("index h=" + std::to_string(h) + " out of range 1.." +
                      std::to_string(m.n));
  }
  const int n = m.n;
  const std::vector<double> mags = magnitudes(m);
  const double lower = *std::min_element(mags.begin(), mags.end());
  const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
  const double c1 = std::cos(kPi / (n + 1));
  const double upper = mags[static_cast<std::size_t>(h - 1)] *
                       ((n - 1) + 2.0 * n * std::abs(c) * c1) /
                       ((n - 1) + 2.0 * n * c * c);
  return {lower, upper};
}

TieReport tie_analysis(const SttMatrix& m, double tie_rtol) {
  require_sigma_nonzero(m, "tie_analysis");

  TieReport report;
  const std::vector<double> mags = magnitudes(m);
  const std::vector<double> rat = ratios(m);
  report.magnitude_minimizers = argmin_indices(mags, tie_rtol);
  report.ratio_minimizers = argmin_indices(rat, tie_rtol);
  report.magnitude_unique = report.magnitude_minimizers.size() == 1;
  report.ratio_unique = report.ratio_minimizers.size() == 1;
  report.coincide =
      report.magnitude_minimizers == report.ratio_minimizers;
  report.unstructured_distance =
      mags[static_cast<std::size_t>(report.magnitude_minimizers.front() - 1)];
  report.structured_distance =
      rat[static_cast<std::size_t>(report.ratio_minimizers.front() - 1)];

  if (m.delta == 0.0) {
    if (m.n % 2 == 1) {
      report.classification = TieCase::SingularZeroDiagonal;
      // The central eigenvalue is 2 sigma cos(pi/2), an exact zero only
      // up to the rounding of the angle; test it at a few ulps of the
      // entry scale.
      const double near_zero = 1e-13 * 2.0 * std::abs(m.sigma);
      report.ties_valid = report.magnitude_minimizers ==
                              std::vector<int>{(m.n + 1) / 2} &&
                          report.unstructured_distance <= near_zero;
      return report;
    }
    report.classification = TieCase::ZeroDiagonalEvenPair;
    const std::vector<int> expected{m.n / 2, m.n / 2 + 1};
    report.ties_valid =
        report.magnitude_minimizers == expected &&
        report.ratio_minimizers == expected &&
        eigenvalue(m, expected[0]) * eigenvalue(m, expected[1]) < 0.0;
    return report;
  }

  report.classification = TieCase::NonzeroDiagonal;
  report.ties_valid =
      (report.magnitude_unique || tie_pair_valid(m, report.magnitude_minimizers)) &&
      (report.ratio_unique || tie_pair_valid(m, report.ratio_minimizers));
  return report;
}

LaplacianAsymptotics laplacian_asymptotics(int n) {
  const SttMatrix m(n, 2.0, -1.0);
  LaplacianAsymptotics rep;
  rep.n = n;
  rep.lambda1 = eigenvalue(m, 1);
  rep.lambda1_scaled = rep.lambda1 * static_cast<double>(n) * n / (kPi * kPi);
  const double kappa = structured_condition_number(n, 1);
  rep.ratio = rep.lambda1 / kappa;
  rep.ratio_scaled =
      rep.ratio * std::pow(static_cast<double>(n), 1.5) * std::sqrt(3.0) /
      (kPi * kPi);
  const SingularCandidate cand = nearest_singular_fixed_index(m, 1);
  rep.delta_star = cand.delta_star;
  rep.sigma_star = cand.sigma_star;
  rep.distance_ratio = kappa;
  rep.sqrt_3_over_n = std::sqrt(3.0 / n);
  return rep;
}

ZeroDiagAsymptotics zero_diag_asymptotics(int n, double sigma) {
  if (n % 2 != 0) {
    throw DomainError("zero_diag_asymptotics requires even n, got n=" +
                      std::to_string(n) +
                      " (odd n makes (n; 0, sigma) singular)");
  }
  if (sigma == 0.0) {
    throw UnsupportedStructureError(
        "zero_diag_asymptotics requires sigma != 0");
  }
  const SttMatrix m(n, 0.0, sigma);
  ZeroDiagAsymptotics rep;
  rep.n = n;
  rep.sigma = sigma;
  rep.d_f = 2.0 * std::abs(sigma) *
            std::cos(static_cast<double>(n) * kPi / (2.0 * (n + 1)));
  rep.d_f_structured = rep.d_f / structured_condition_number(n, n / 2);
  rep.minimizer_low = nearest_singular_fixed_index(m, n / 2);
  rep.minimizer_high = nearest_singular_fixed_index(m, n / 2 + 1);
  rep.ratio_times_sqrt_n =
      rep.d_f / rep.d_f_structured * std::sqrt(static_cast<double>(n));
  return rep;
}

}  // namespace tsl
