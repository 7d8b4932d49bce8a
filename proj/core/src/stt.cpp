#include "tsl/stt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tsl/errors.hpp"

namespace tsl {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

void check_index(const SttMatrix& m, int h) {
  if (h < 1 || h > m.n) {
    throw DomainError("eigenvalue index h=" + std::to_string(h) +
                      " out of range 1.." + std::to_string(m.n));
  }
}

}  // namespace

SttMatrix::SttMatrix(int n_, double delta_, double sigma_)
    : n(n_), delta(delta_), sigma(sigma_) {
  if (n < 2) {
    throw DomainError("SttMatrix requires n >= 2, got n=" + std::to_string(n));
  }
}

double eigenvalue(const SttMatrix& m, int h) {
  check_index(m, h);
  const double angle = static_cast<double>(h) * kPi / (m.n + 1);
  return m.delta + 2.0 * m.sigma * std::cos(angle);
}

std::vector<double> eigenvalues(const SttMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.n));
  for (int h = 1; h <= m.n; ++h)
    out[static_cast<std::size_t>(h - 1)] = eigenvalue(m, h);
  return out;
}

double smallest_eigenvalue(const SttMatrix& m) {
  return std::min(eigenvalue(m, 1), eigenvalue(m, m.n));
}

double largest_eigenvalue(const SttMatrix& m) {
  return std::max(eigenvalue(m, 1), eigenvalue(m, m.n));
}

std::vector<double> eigenvector(const SttMatrix& m, int h) {
  check_index(m, h);
  const int n = m.n;
  const double scale = std::sqrt(2.0 / (n + 1));
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double angle =
        static_cast<double>(h) * static_cast<double>(k) * kPi / (n + 1);
    x[static_cast<std::size_t>(k - 1)] = scale * std::sin(angle);
  }
  return x;
}

Spectrum spectrum(const SttMatrix& m) {
  Spectrum s;
  s.simple = m.sigma != 0.0;
  s.pairs.reserve(static_cast<std::size_t>(m.n));
  for (int h = 1; h <= m.n; ++h)
    s.pairs.push_back({h, eigenvalue(m, h), eigenvector(m, h)});
  return s;
}

Matrix dense(const SttMatrix& m, int size_cap) {
  if (m.n > size_cap) {
    throw ResourceError("dense realization of n=" + std::to_string(m.n) +
                        " exceeds cap " + std::to_string(size_cap));
  }
  Matrix a(m.n, m.n);
  for (int i = 0; i < m.n; ++i) {
    a(i, i) = m.delta;
    if (i + 1 < m.n) {
      a(i, i + 1) = m.sigma;
      a(i + 1, i) = m.sigma;
    }
  }
  return a;
}

}  // namespace tsl
