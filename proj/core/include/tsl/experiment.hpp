#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tsl/config.hpp"

namespace tsl::oracle {

/// Seedable standard-normal stream: mt19937_64 plus the Box-Muller
/// transform (pairs generated together, the spare cached). Both pieces
/// are fully specified, so a fixed seed reproduces the stream
/// bit-for-bit on any platform.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Substream key for (seed, stream): two rounds of splitmix64 over the
/// combined word, so per-n streams are independent of iteration order.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Sampling protocol for the magnitude-vs-ratio mismatch count over
/// random indefinite matrices. The discard rule is fixed: a draw
/// (delta, sigma) from the standard normal is discarded when
/// delta*sigma == 0 or |delta| >= 2|sigma| cos(pi/(n+1)) (the boundary
/// is discarded too). Ties in magnitude or in ratio are skipped, using
/// tie_rtol.
struct ExperimentConfig {
  int n_min = 2;
  int n_max = 50;
  int samples_per_n = 10000;
  std::uint64_t seed = 42;
  double tie_rtol = kDefaultTieRtol;
};

struct ExperimentCounts {
  std::int64_t tested = 0;
  std::int64_t discarded = 0;
  std::int64_t ties_skipped = 0;
  std::int64_t mismatches = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::pair<int, ExperimentCounts>> per_n;  // ascending n
  ExperimentCounts totals;
  double percentage;  // mismatches / tested * 100

  // RNG metadata, recorded for reproducibility.
  static constexpr const char* kGenerator = "mt19937_64";
  static constexpr const char* kNormalTransform = "box-muller";
  static constexpr const char* kSubstream = "splitmix64(seed, n)";
  static constexpr const char* kDiscardRule =
      "delta*sigma == 0 or |delta| >= 2|sigma|cos(pi/(n+1))";
};

/// Runs the experiment. Each dimension n draws samples_per_n pairs
/// (delta first, then sigma) from its own substream, so the result is
/// independent of scheduling and deterministic for a fixed seed.
/// For every kept draw the magnitude argmin and the ratio argmin over
/// h = 1..n are compared; a disagreement counts as a mismatch.
ExperimentResult mismatch_experiment(const ExperimentConfig& cfg);

}  // namespace tsl::oracle
