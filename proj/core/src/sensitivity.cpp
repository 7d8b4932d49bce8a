#include "tsl/sensitivity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tsl/errors.hpp"

namespace tsl {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

void check_args(int n, int h) {
  if (n < 2) {
    throw DomainError("structured conditioning requires n >= 2, got n=" +
                      std::to_string(n));
  }
  if (h < 1 || h > n) {
    throw DomainError("index h=" + std::to_string(h) + " out of range 1.." +
                      std::to_string(n));
  }
}

}  // namespace

SttProjection project_rank_one(const SttMatrix& m, int h) {
  check_args(m.n, h);
  const int n = m.n;
  const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
  const double d = 1.0 / n;
  const double s = c / (n - 1);
  const double fro = std::sqrt(n * d * d + 2.0 * (n - 1) * s * s);
  return {n, d, s, fro};
}

double structured_condition_number(int n, int h) {
  check_args(n, h);
  const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
  return std::sqrt(1.0 / n + 2.0 * c * c / (n - 1));
}

SttProjection worst_case_perturbation(const SttMatrix& m, int h) {
  SttProjection p = project_rank_one(m, h);
  const double scale = 1.0 / p.fro_norm;
  p.d *= scale;
  p.s *= scale;
  p.fro_norm = std::sqrt(p.n * p.d * p.d + 2.0 * (p.n - 1) * p.s * p.s);
  return p;
}

ConditionReport condition_report(int n, int h) {
  const double kappa = structured_condition_number(n, h);
  return {h, kappa, 1.0, kappa};
}

ConditionExtremes condition_extremes(int n) {
  if (n < 2) {
    throw DomainError("condition_extremes requires n >= 2, got n=" +
                      std::to_string(n));
  }
  ConditionExtremes ex;
  if (n % 2 == 1) {
    ex.min_indices = {(n + 1) / 2};
  } else {
    ex.min_indices = {n / 2, n / 2 + 1};
  }
  ex.kappa_min = structured_condition_number(n, ex.min_indices.front());
  ex.min_estimate = std::sqrt(1.0 / n);
  ex.max_indices = {1, n};
  ex.kappa_max = structured_condition_number(n, 1);
  ex.max_estimate = std::sqrt(3.0 / n);
  ex.max_min_ratio = ex.kappa_max / ex.kappa_min;
  return ex;
}

}  // namespace tsl
