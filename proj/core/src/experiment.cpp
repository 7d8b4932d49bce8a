#include "tsl/experiment.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tsl/errors.hpp"

namespace tsl::oracle {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Smallest value and (up to two) tied indices; a third tie only matters
// as "not unique", so tracking two suffices.
struct MinScan {
  double value = 0.0;
  int index = 0;  // 1-based argmin (lowest)
  bool tie = false;
};

MinScan scan_min(const std::vector<double>& values, double rtol) {
  MinScan scan;
  scan.value = values[0];
  scan.index = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < scan.value) {
      scan.value = values[i];
      scan.index = static_cast<int>(i) + 1;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<int>(i) + 1 == scan.index) continue;
    const double scale = std::max(std::abs(values[i]), std::abs(scan.value));
    if (scale == 0.0 || std::abs(values[i] - scan.value) <= rtol * scale) {
      scan.tie = true;
      break;
    }
  }
  return scan;
}

}  // namespace

double NormalSampler::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms: u1 in (0, 1] so the log is finite, u2 in [0, 1).
  const double u1 =
      (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * kPi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream));
}

ExperimentResult mismatch_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) {
    throw DomainError("experiment range requires 2 <= n_min <= n_max, got [" +
                      std::to_string(cfg.n_min) + ", " +
                      std::to_string(cfg.n_max) + "]");
  }
  if (cfg.samples_per_n < 1) {
    throw DomainError("experiment requires samples_per_n >= 1");
  }

  ExperimentResult result;
  result.config = cfg;
  result.per_n.reserve(static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1));

  std::vector<double> cosines;
  std::vector<double> kappas;
  std::vector<double> mags;
  std::vector<double> rats;

  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    cosines.resize(static_cast<std::size_t>(n));
    kappas.resize(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h) {
      const double c = std::cos(static_cast<double>(h) * kPi / (n + 1));
      cosines[static_cast<std::size_t>(h - 1)] = c;
      kappas[static_cast<std::size_t>(h - 1)] =
          std::sqrt(1.0 / n + 2.0 * c * c / (n - 1));
    }
    const double indefinite_bound = 2.0 * std::cos(kPi / (n + 1));
    mags.resize(static_cast<std::size_t>(n));
    rats.resize(static_cast<std::size_t>(n));

    NormalSampler sampler(
        substream_seed(cfg.seed, static_cast<std::uint64_t>(n)));
    ExperimentCounts counts;
    for (int sample = 0; sample < cfg.samples_per_n; ++sample) {
      const double delta = sampler.next();
      const double sigma = sampler.next();
      if (delta * sigma == 0.0 ||
          std::abs(delta) >= std::abs(sigma) * indefinite_bound) {
        ++counts.discarded;
        continue;
      }
      for (int h = 1; h <= n; ++h) {
        const std::size_t i = static_cast<std::size_t>(h - 1);
        mags[i] = std::abs(delta + 2.0 * sigma * cosines[i]);
        rats[i] = mags[i] / kappas[i];
      }
      const MinScan mag_scan = scan_min(mags, cfg.tie_rtol);
      const MinScan rat_scan = scan_min(rats, cfg.tie_rtol);
      if (mag_scan.tie || rat_scan.tie) {
        ++counts.ties_skipped;
        continue;
      }
      ++counts.tested;
      if (mag_scan.index != rat_scan.index) ++counts.mismatches;
    }

    result.per_n.emplace_back(n, counts);
    result.totals.tested += counts.tested;
    result.totals.discarded += counts.discarded;
    result.totals.ties_skipped += counts.ties_skipped;
    result.totals.mismatches += counts.mismatches;
  }

  result.percentage =
      result.totals.tested == 0
          ? 0.0
          : 100.0 * static_cast<double>(result.totals.mismatches) /
                static_cast<double>(result.totals.tested);
  return result;
}

}  // namespace tsl::oracle
