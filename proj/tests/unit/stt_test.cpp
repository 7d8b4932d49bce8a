#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "tsl/errors.hpp"
#include "tsl/stt.hpp"
#include "test_util.hpp"

namespace tsl::testing {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

TEST_CASE("eigenvalue closed form", "[stt]") {
  SECTION("(1000; 2, -1) smallest eigenvalue") {
    const SttMatrix m(1000, 2.0, -1.0);
    CHECK(rel_diff(eigenvalue(m, 1), 9.8499e-6) < 1e-4);
  }
  SECTION("zero off-diagonal collapses the spectrum to delta") {
    const SttMatrix m(5, 7.0, 0.0);
    for (int h = 1; h <= 5; ++h) CHECK(eigenvalue(m, h) == 7.0);
  }
  SECTION("(9; cos(pi/20), -sqrt(2)/2) central eigenvalue") {
    const SttMatrix m(9, std::cos(kPi / 20), -std::sqrt(2.0) / 2);
    CHECK(rel_diff(eigenvalue(m, 5), 9.8769e-1) < 1e-4);
  }
  SECTION("index out of range") {
    const SttMatrix m(4, 1.0, 1.0);
    CHECK_THROWS_AS(eigenvalue(m, 0), DomainError);
    CHECK_THROWS_AS(eigenvalue(m, 5), DomainError);
  }
}

TEST_CASE("eigenvector closed form", "[stt]") {
  SECTION("n=3, h=2: sines at multiples of pi/2") {
    const SttMatrix m(3, 0.4, -2.3);
    const std::vector<double> x = eigenvector(m, 2);
    const double r = std::sqrt(2.0) / 2;
    CHECK(std::abs(x[0] - r) < 1e-15);
    CHECK(std::abs(x[1]) < 1e-15);
    CHECK(std::abs(x[2] + r) < 1e-15);
  }
  SECTION("n=2, h=1: symmetric pair") {
    const SttMatrix m(2, 1.0, 1.0);
    const std::vector<double> x = eigenvector(m, 1);
    CHECK(std::abs(x[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(x[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
  }
  SECTION("residual against the dense realization") {
    const SttMatrix m(12, 0.3, 1.7);
    const Matrix t = dense(m);
    const std::vector<double> v = eigenvector(m, 4);
    const double lambda = eigenvalue(m, 4);
    const std::vector<double> tv = mat_vec(t, v);
    double res = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double r = tv[k] - lambda * v[k];
      res += r * r;
    }
    CHECK(std::sqrt(res) <= 1e-12);
  }
  SECTION("unit norm") {
    const SttMatrix m(57, -4.0, 0.25);
    for (int h : {1, 17, 57}) {
      double norm2 = 0.0;
      for (double v : eigenvector(m, h)) norm2 += v * v;
      CHECK(std::abs(norm2 - 1.0) < 1e-13);
    }
  }
  SECTION("independent of delta and sigma, byte for byte") {
    const std::vector<double> a = eigenvector(SttMatrix(31, 2.0, -1.0), 7);
    const std::vector<double> b = eigenvector(SttMatrix(31, -8.5, 123.0), 7);
    CHECK(a == b);
  }
}

TEST_CASE("spectrum", "[stt]") {
  SECTION("(2; 0, 1): exact cosines") {
    const Spectrum s = spectrum(SttMatrix(2, 0.0, 1.0));
    REQUIRE(s.pairs.size() == 2);
    CHECK(std::abs(s.pairs[0].lambda - 1.0) < 1e-15);
    CHECK(std::abs(s.pairs[1].lambda + 1.0) < 1e-15);
    CHECK(s.simple);
  }
  SECTION("(1000; 0, 1): central pair") {
    const SttMatrix m(1000, 0.0, 1.0);
    CHECK(rel_diff(eigenvalue(m, 500), 3.1385e-3) < 1e-4);
    CHECK(rel_diff(eigenvalue(m, 501), -3.1385e-3) < 1e-4);
  }
  SECTION("(10; 1.8, -1): two smallest") {
    const SttMatrix m(10, 1.8, -1.0);
    CHECK(rel_diff(eigenvalue(m, 2), 1.1749e-1) < 1e-4);
    CHECK(rel_diff(eigenvalue(m, 1), -1.1899e-1) < 1e-4);
  }
  SECTION("sigma = 0 admitted but flagged") {
    const Spectrum s = spectrum(SttMatrix(6, 3.5, 0.0));
    CHECK_FALSE(s.simple);
    for (const EigenPair& p : s.pairs) CHECK(p.lambda == 3.5);
  }
}

TEST_CASE("spectrum invariants", "[stt]") {
  Rng rng(2024);
  SECTION("eigenvalue symmetry about delta") {
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform_int(2, 400);
      const SttMatrix m(n, rng.normal(), rng.normal());
      const double scale =
          std::abs(m.delta) + 2.0 * std::abs(m.sigma) + 1.0;
      for (int h = 1; h <= n; ++h) {
        const double sum = eigenvalue(m, h) + eigenvalue(m, n + 1 - h);
        CHECK(std::abs(sum - 2.0 * m.delta) <= 1e-12 * scale);
      }
    }
  }
  SECTION("residuals across sizes") {
    for (int n : {2, 50, 500, 2000}) {
      const SttMatrix m(n, 1.4, -0.6);
      const Matrix t = dense(m);
      const double tol = 1e-10 * (std::abs(m.delta) + 2 * std::abs(m.sigma) + 1);
      for (int h : {1, n / 2 + 1, n}) {
        const std::vector<double> x = eigenvector(m, h);
        const double lambda = eigenvalue(m, h);
        const std::vector<double> tx = mat_vec(t, x);
        double res = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
          const double r = tx[k] - lambda * x[k];
          res += r * r;
        }
        CHECK(std::sqrt(res) <= tol);
      }
    }
  }
  SECTION("orthonormality of the eigenvector basis") {
    for (int n : {2, 37, 500}) {
      const SttMatrix m(n, 0.0, 1.0);
      std::vector<std::vector<double>> x;
      x.reserve(static_cast<std::size_t>(n));
      for (int h = 1; h <= n; ++h) x.push_back(eigenvector(m, h));
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          double dot = 0.0;
          for (int k = 0; k < n; ++k)
            dot += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                   x[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
          worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
      }
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("dense realization", "[stt]") {
  SECTION("2x2 definition") {
    const Matrix t = dense(SttMatrix(2, 3.25, -0.5));
    CHECK(t(0, 0) == 3.25);
    CHECK(t(1, 1) == 3.25);
    CHECK(t(0, 1) == -0.5);
    CHECK(t(1, 0) == -0.5);
  }
  SECTION("3x3 stencil") {
    const Matrix t = dense(SttMatrix(3, 0.0, 1.0));
    const double expected[3][3] = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(t(i, j) == expected[i][j]);
  }
  SECTION("row sums of the discrete Laplacian stencil") {
    const Matrix t = dense(SttMatrix(5, 2.0, -1.0));
    const double expected[5] = {1, 0, 0, 0, 1};
    for (int i = 0; i < 5; ++i) {
      double sum = 0.0;
      for (int j = 0; j < 5; ++j) sum += t(i, j);
      CHECK(sum == expected[i]);
    }
  }
  SECTION("size cap") {
    CHECK_THROWS_AS(dense(SttMatrix(10, 1.0, 1.0), 9), ResourceError);
    CHECK_THROWS_AS(dense(SttMatrix(4097, 1.0, 1.0)), ResourceError);
  }
}

TEST_CASE("n = 1 is rejected", "[stt]") {
  CHECK_THROWS_AS(SttMatrix(1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(SttMatrix(0, 1.0, 1.0), DomainError);
}

}  // namespace tsl::testing
