#include "cli_app.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsl/cholesky.hpp"
#include "tsl/config.hpp"
#include "tsl/distance.hpp"
#include "tsl/errors.hpp"
#include "tsl/experiment.hpp"
#include "tsl/expr.hpp"
#include "tsl/oracle.hpp"
#include "tsl/report_io.hpp"
#include "tsl/sensitivity.hpp"
#include "tsl/stt.hpp"

namespace tsl::cli {

namespace {

enum class Format { plain, csv, json };

struct GlobalOptions {
  Format format = Format::plain;
  std::string out_path;
  std::uint64_t seed = 42;
  double tie_rtol = kDefaultTieRtol;
};

/// Writes to --out when given, standard output otherwise.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      stream_ = &file_;
    }
  }

  bool ok() const { return stream_ != &file_ || file_.good(); }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

/// One scalar parameter accepted either as a plain value or as a
/// constant expression (--x vs --x-expr).
struct ScalarParam {
  std::optional<double> value;
  std::string expression;

  double resolve(const char* name) const {
    if (!expression.empty()) return expr::evaluate(expression);
    if (value) return *value;
    throw CLI::RequiredError(std::string("--") + name + " or --" + name +
                             "-expr");
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tie_case_name(TieCase c) {
  switch (c) {
    case TieCase::SingularZeroDiagonal:
      return "singular (zero diagonal, odd n)";
    case TieCase::ZeroDiagonalEvenPair:
      return "two-minimizer pair (zero diagonal, even n)";
    case TieCase::NonzeroDiagonal:
      return "nonzero diagonal";
  }
  return "?";
}

void render_indices(std::ostream& os, const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
}

// ---------------------------------------------------------------- analyze

void render_analysis_plain(std::ostream& os, const SttMatrix& m,
                           const NearestSingularReport& r,
                           const TieReport& t) {
  os << "T = (" << m.n << "; " << io::format_plain(m.delta) << ", "
     << io::format_plain(m.sigma) << ")\n";
  os << "definite: " << yes_no(r.definite) << "\n\n";
  os << std::setw(6) << "h" << std::setw(15) << "lambda" << std::setw(15)
     << "kappa" << std::setw(15) << "ratio" << '\n';
  for (int h = 1; h <= m.n; ++h) {
    const double lambda = eigenvalue(m, h);
    const double kappa = structured_condition_number(m.n, h);
    os << std::setw(6) << h << std::setw(15) << io::format_plain(lambda)
       << std::setw(15) << io::format_plain(kappa) << std::setw(15)
       << io::format_plain(std::abs(lambda) / kappa) << '\n';
  }
  os << "\nd_F = " << io::format_plain(r.unstructured_distance) << " (h: ";
  render_indices(os, r.unstructured_minimizer_indices);
  os << ")\n";
  os << "d_F^T = " << io::format_plain(r.structured_distance_f) << "\n";
  os << "structured minimizers:\n";
  for (const SingularCandidate& c : r.minimizers) {
    os << "  h=" << c.h << ": delta* = " << io::format_plain(c.delta_star)
       << ", sigma* = " << io::format_plain(c.sigma_star)
       << ", distance = " << io::format_plain(c.distance_f) << '\n';
  }
  os << "unique: " << yes_no(r.unique) << '\n';
  os << "d_2 lower bound = " << io::format_plain(r.spectral_lower) << '\n';
  os << "d_2 upper bound = " << io::format_plain(r.spectral_upper) << '\n';
  os << "tie classification: " << tie_case_name(t.classification) << '\n';
  if (t.classification == TieCase::NonzeroDiagonal) {
    os << "  magnitude minimizer unique: " << yes_no(t.magnitude_unique)
       << "; ratio minimizer unique: " << yes_no(t.ratio_unique)
       << "; coincide: " << yes_no(t.coincide) << '\n';
  }
}

int cmd_analyze(std::ostream& os, const GlobalOptions& g, int n, double delta,
                double sigma) {
  const SttMatrix m(n, delta, sigma);
  const NearestSingularReport report = structured_distance(m, g.tie_rtol);
  switch (g.format) {
    case Format::plain:
      render_analysis_plain(os, m, report, tie_analysis(m, g.tie_rtol));
      break;
    case Format::csv:
      io::write_analysis_csv(os, m);
      break;
    case Format::json:
      os << io::report_json(report) << '\n';
      break;
  }
  return 0;
}

// --------------------------------------------------------------- spectrum

int cmd_spectrum(std::ostream& os, const GlobalOptions& g, int n, double delta,
                 double sigma) {
  const SttMatrix m(n, delta, sigma);
  switch (g.format) {
    case Format::plain:
      os << "T = (" << n << "; " << io::format_plain(delta) << ", "
         << io::format_plain(sigma) << ")\n";
      os << std::setw(6) << "h" << std::setw(15) << "lambda" << '\n';
      for (int h = 1; h <= n; ++h) {
        os << std::setw(6) << h << std::setw(15)
           << io::format_plain(eigenvalue(m, h)) << '\n';
      }
      break;
    case Format::csv:
      io::write_spectrum_csv(os, m);
      break;
    case Format::json: {
      std::ostringstream lambdas;
      lambdas << '[';
      for (int h = 1; h <= n; ++h) {
        lambdas << (h > 1 ? "," : "") << io::format_full(eigenvalue(m, h));
      }
      lambdas << ']';
      os << "{\n  \"n\": " << n << ",\n  \"delta\": "
         << io::format_full(delta) << ",\n  \"sigma\": "
         << io::format_full(sigma) << ",\n  \"lambdas\": " << lambdas.str()
         << "\n}\n";
      break;
    }
  }
  return 0;
}

// --------------------------------------------------------------- cholesky

void render_cholesky_plain(std::ostream& os, const SttMatrix& m,
                           const CholeskyFactor& f,
                           const MonotonicityReport& mono,
                           const InversePatternReport* pattern) {
  os << "Cholesky factor of T = (" << m.n << "; " << io::format_plain(m.delta)
     << ", " << io::format_plain(m.sigma) << ")"
     << (f.negated ? "  [factored as -T: negative definite input]" : "")
     << '\n';
  os << "r_1,1 = " << io::format_plain(f.diag.front())
     << "   r_n,n = " << io::format_plain(f.diag.back()) << '\n';
  os << "r_1,2 = " << io::format_plain(f.super.front())
     << "   r_n-1,n = " << io::format_plain(f.super.back()) << '\n';
  os << "diagonal nonincreasing: " << yes_no(mono.diag_nonincreasing) << '\n';
  os << "super sign matches sigma: " << yes_no(mono.super_sign_matches_sigma)
     << '\n';
  os << "super magnitudes nondecreasing: "
     << yes_no(mono.super_magnitude_nondecreasing) << '\n';
  os << "dominance regime (delta >= 2|sigma|): "
     << yes_no(mono.dominance_regime);
  if (mono.dominance_regime) os << " -> holds: " << yes_no(mono.dominance_holds);
  os << '\n';
  if (pattern) {
    os << "R^-1 pattern: entries positive: " << yes_no(pattern->entries_positive)
       << "; rows decreasing: " << yes_no(pattern->rows_decreasing)
       << "; diagonals increasing: " << yes_no(pattern->diagonals_increasing)
       << " (absolute values: " << yes_no(pattern->use_absolute_values)
       << ")\n";
  }
}

int cmd_cholesky(std::ostream& os, const GlobalOptions& g, int n, double delta,
                 double sigma, const std::string& inverse_csv) {
  const SttMatrix m(n, delta, sigma);
  const CholeskyFactor f = cholesky_factor(m);
  const MonotonicityReport mono = monotonicity_report(f, m);
  std::optional<InversePatternReport> pattern;
  if (n <= kDenseSizeCap) pattern = inverse_pattern_report(f);

  if (!inverse_csv.empty()) {
    if (n > kDenseSizeCap) {
      throw ResourceError("R^-1 grid export capped at n <= " +
                          std::to_string(kDenseSizeCap));
    }
    std::ofstream file(inverse_csv);
    if (!file.good()) {
      throw ResourceError("cannot open '" + inverse_csv + "' for writing");
    }
    io::write_grid_csv(file, inverse_factor(f), /*upper_only=*/true);
  }

  switch (g.format) {
    case Format::plain:
      render_cholesky_plain(os, m, f, mono, pattern ? &*pattern : nullptr);
      break;
    case Format::csv:
      io::write_factor_csv(os, f);
      break;
    case Format::json: {
      std::ostringstream diag;
      std::ostringstream super;
      diag << '[';
      for (std::size_t i = 0; i < f.diag.size(); ++i)
        diag << (i ? "," : "") << io::format_full(f.diag[i]);
      diag << ']';
      super << '[';
      for (std::size_t i = 0; i < f.super.size(); ++i)
        super << (i ? "," : "") << io::format_full(f.super[i]);
      super << ']';
      os << "{\n  \"n\": " << n
         << ",\n  \"negated\": " << (f.negated ? "true" : "false")
         << ",\n  \"diag\": " << diag.str()
         << ",\n  \"super\": " << super.str()
         << ",\n  \"diag_nonincreasing\": "
         << (mono.diag_nonincreasing ? "true" : "false")
         << ",\n  \"super_sign_matches_sigma\": "
         << (mono.super_sign_matches_sigma ? "true" : "false")
         << ",\n  \"super_magnitude_nondecreasing\": "
         << (mono.super_magnitude_nondecreasing ? "true" : "false")
         << ",\n  \"dominance_regime\": "
         << (mono.dominance_regime ? "true" : "false")
         << ",\n  \"dominance_holds\": "
         << (mono.dominance_holds ? "true" : "false") << "\n}\n";
      break;
    }
  }
  return 0;
}

// --------------------------------------------------------------- examples

class ExampleChecker {
 public:
  explicit ExampleChecker(std::ostream& os) : os_(os) {}

  /// Relative comparison at the display precision of the reference
  /// tables (5 significant digits).
  void check(const std::string& name, double computed, double expected,
             double rtol = 1e-4) {
    const bool pass = std::abs(computed - expected) <=
                      rtol * std::max(std::abs(expected), 1e-300);
    note(name, computed, expected, pass);
  }

  void check_zero(const std::string& name, double computed,
                  double atol = 1e-10) {
    note(name, computed, 0.0, std::abs(computed) <= atol);
  }

  void check_flag(const std::string& name, bool ok) {
    os_ << "  " << name << ": " << (ok ? "PASS" : "FAIL") << '\n';
    all_pass_ &= ok;
  }

  bool all_pass() const { return all_pass_; }

 private:
  void note(const std::string& name, double computed, double expected,
            bool pass) {
    os_ << "  " << name << ": computed " << io::format_plain(computed)
        << "  expected " << io::format_plain(expected) << "  "
        << (pass ? "PASS" : "FAIL") << '\n';
    all_pass_ &= pass;
  }

  std::ostream& os_;
  bool all_pass_ = true;
};

int cmd_example_1(std::ostream& os, const GlobalOptions& g,
                  const std::string& rinv_csv) {
  const SttMatrix m(1000, 2.0, -1.0);
  os << "Example 1: T = (1000; 2, -1), positive definite\n";
  ExampleChecker ck(os);
  const NearestSingularReport r = structured_distance(m, g.tie_rtol);
  ck.check("lambda_1", eigenvalue(m, 1), 9.8499e-6);
  ck.check("kappa(lambda_1)", structured_condition_number(1000, 1), 5.4790e-2);
  ck.check("d_F", r.unstructured_distance, 9.8499e-6);
  ck.check("d_F^T", r.structured_distance_f, 1.7977e-4);
  ck.check("d_2 lower", r.spectral_lower, 9.8499e-6);
  ck.check("d_2 upper", r.spectral_upper, 9.8499e-6);
  ck.check_flag("structured minimizer h=1",
                r.minimizers.size() == 1 && r.minimizers.front().h == 1);

  const CholeskyFactor f = cholesky_factor(m);
  const MonotonicityReport mono = monotonicity_report(f, m);
  const InversePatternReport pattern = inverse_pattern_report(f);
  os << "Cholesky monotonicity:\n";
  ck.check_flag("diagonal nonincreasing", mono.diag_nonincreasing);
  ck.check_flag("super sign matches sigma", mono.super_sign_matches_sigma);
  ck.check_flag("super magnitudes nondecreasing",
                mono.super_magnitude_nondecreasing);
  ck.check_flag("dominance (delta >= 2|sigma|) holds",
                mono.dominance_regime && mono.dominance_holds);
  os << "R^-1 diagnostics:\n";
  ck.check_flag("entries positive", pattern.entries_positive);
  ck.check_flag("rows decreasing", pattern.rows_decreasing);
  ck.check_flag("diagonals increasing", pattern.diagonals_increasing);
  if (!rinv_csv.empty()) {
    std::ofstream file(rinv_csv);
    if (!file.good()) {
      throw ResourceError("cannot open '" + rinv_csv + "' for writing");
    }
    io::write_grid_csv(file, inverse_factor(f), /*upper_only=*/true);
    os << "R^-1 structure CSV written to " << rinv_csv << '\n';
  }
  return ck.all_pass() ? 0 : 4;
}

int cmd_example_2(std::ostream& os, const GlobalOptions& g) {
  const SttMatrix m(1000, 0.0, 1.0);
  os << "Example 2: T = (1000; 0, 1), two tied minimizers\n";
  ExampleChecker ck(os);
  const NearestSingularReport r = structured_distance(m, g.tie_rtol);
  ck.check("d_F", r.unstructured_distance, 3.1385e-3);
  ck.check_flag("magnitude minimizers {500, 501}",
                r.unstructured_minimizer_indices ==
                    std::vector<int>{500, 501});
  ck.check("kappa(lambda_500)", structured_condition_number(1000, 500),
           3.16229e-2);
  ck.check("d_F^T", r.structured_distance_f, 9.9246e-2);
  ck.check_flag("exactly two structured minimizers",
                r.minimizers.size() == 2 && !r.unique);
  if (r.minimizers.size() == 2) {
    const SingularCandidate& a = r.minimizers[0];
    const SingularCandidate& b = r.minimizers[1];
    os << "  minimizer pair: (delta*, sigma*) = ("
       << io::format_plain(a.delta_star) << ", "
       << io::format_plain(a.sigma_star) << ") and ("
       << io::format_plain(b.delta_star) << ", "
       << io::format_plain(b.sigma_star) << ")\n";
    ck.check("delta*+ vs -delta*-", a.delta_star, -b.delta_star, 1e-10);
    ck.check("sigma*+ vs sigma*-", a.sigma_star, b.sigma_star, 1e-10);
  }
  return ck.all_pass() ? 0 : 4;
}

int cmd_example_3(std::ostream& os, const GlobalOptions& g) {
  const SttMatrix m(9, std::cos(std::acos(-1.0) / 20), -std::sqrt(2.0) / 2);
  os << "Example 3: T = (9; cos(pi/20), -sqrt(2)/2), magnitude tie at h in "
        "{2, 3}\n";
  // Reference table, 5 significant digits. The h=5 entry of the
  // S*^T column is 1.0510e0 = delta*: zeroing lambda_2 with
  // c = cos(pi/5) puts the central eigenvalue at delta*.
  static constexpr double kLambda[9] = {-3.5731e-1, -1.5643e-1, 1.5643e-1,
                                        5.5067e-1,  9.8769e-1,  1.4247e0,
                                        1.8189e0,   2.1318e0,   2.3327e0};
  static constexpr double kKappa[9] = {5.8072e-1, 5.2415e-1, 4.4439e-1,
                                       3.6740e-1, 3.3333e-1, 3.6740e-1,
                                       4.4439e-1, 5.2415e-1, 5.8072e-1};
  static constexpr double kLambdaStar[9] = {-1.8452e-1, 0.0,       2.8739e-1,
                                            6.4953e-1,  1.0510e0,  1.4524e0,
                                            1.8145e0,   2.1019e0,  2.2864e0};
  ExampleChecker ck(os);
  const NearestSingularReport r = structured_distance(m, g.tie_rtol);
  ck.check_flag("magnitude tie {2, 3}", r.unstructured_minimizer_indices ==
                                            std::vector<int>{2, 3});
  ck.check_flag("ratio minimizer unique at h=2",
                r.unique && r.minimizers.front().h == 2);

  const SingularCandidate cand = nearest_singular_fixed_index(m, 2);
  const SttMatrix star(9, cand.delta_star, cand.sigma_star);
  for (int h = 1; h <= 9; ++h) {
    const std::string tag = "h=" + std::to_string(h);
    ck.check(tag + " lambda", eigenvalue(m, h), kLambda[h - 1]);
    ck.check(tag + " kappa", structured_condition_number(9, h),
             kKappa[h - 1]);
    if (h == 2) {
      ck.check_zero(tag + " lambda(S*T)", eigenvalue(star, h));
    } else {
      ck.check(tag + " lambda(S*T)", eigenvalue(star, h), kLambdaStar[h - 1]);
    }
  }

  // Unstructured nearest singular matrix: its spectrum must match the
  // original one with lambda_2 replaced by zero.
  const std::vector<double> oracle_ev =
      oracle::symmetric_eigenvalues(oracle::eckart_young_dropped(m, 2));
  std::vector<double> expected;
  for (int h = 1; h <= 9; ++h) expected.push_back(h == 2 ? 0.0 : eigenvalue(m, h));
  std::sort(expected.begin(), expected.end());
  bool star_ok = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(oracle_ev[i] - expected[i]) > 1e-8) star_ok = false;
  }
  ck.check_flag("lambda(S*) column reproduced by the oracle eigensolver",
                star_ok);
  return ck.all_pass() ? 0 : 4;
}

int cmd_example_4(std::ostream& os, const GlobalOptions& g) {
  const SttMatrix m(10, 1.8, -1.0);
  os << "Example 4: T = (10; 1.8, -1), magnitude and ratio minimizers "
        "disagree\n";
  static constexpr double kLambda[10] = {-1.1899e-1, 1.1749e-1, 4.9028e-1,
                                         9.6917e-1,  1.5154e0,  2.0846e0,
                                         2.6308e0,   3.1097e0,  3.4825e0,
                                         3.7190e0};
  static constexpr double kRatio[10] = {2.1560e-1, 2.3164e-1, 1.1094e0,
                                        2.6056e0,  4.6877e0,  6.4487e0,
                                        7.0730e0,  7.0368e0,  6.8659e0,
                                        6.7386e0};
  ExampleChecker ck(os);
  const NearestSingularReport r = structured_distance(m, g.tie_rtol);
  ck.check_flag("magnitude minimizer h=2",
                r.unstructured_minimizer_indices == std::vector<int>{2});
  ck.check_flag("ratio minimizer h=1",
                r.unique && r.minimizers.front().h == 1);
  ck.check("d_F", r.unstructured_distance, 1.1749e-1);
  ck.check("d_F^T", r.structured_distance_f, 2.1560e-1);
  for (int h = 1; h <= 10; ++h) {
    const std::string tag = "h=" + std::to_string(h);
    const double lambda = eigenvalue(m, h);
    const double ratio =
        std::abs(lambda) / structured_condition_number(10, h);
    ck.check(tag + " lambda", lambda, kLambda[h - 1]);
    ck.check(tag + " ratio", ratio, kRatio[h - 1]);
  }
  return ck.all_pass() ? 0 : 4;
}

// ---------------------------------------------------------------- figures

int cmd_figures(std::ostream& os, std::ostream& err, const GlobalOptions& g,
                int figure, int n, int n_min, int n_max, int samples,
                bool grid, bool extremes) {
  switch (figure) {
    case 1:
      if (extremes) {
        io::write_extremes_csv(os, condition_extremes(n));
      } else {
        io::write_condition_csv(os, n);
      }
      return 0;
    case 2: {
      if (!grid) {
        err << "error: figure 2 is a dense grid; pass --grid to export\n";
        return 1;
      }
      const SttMatrix m(n, 0.0, 1.0);  // eigenvectors ignore delta, sigma
      os << "h,row,col,value\n";
      for (int h : {1, n / 2}) {
        const std::vector<double> x = eigenvector(m, h);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            os << h << ',' << (i + 1) << ',' << (j + 1) << ','
               << io::format_full(x[static_cast<std::size_t>(i)] *
                                  x[static_cast<std::size_t>(j)])
               << '\n';
      }
      return 0;
    }
    case 3:
      os << "n,ratio,parity\n";
      for (int dim = 2; dim <= n_max; ++dim) {
        os << dim << ',' << io::format_full(condition_extremes(dim).max_min_ratio)
           << ',' << (dim % 2 == 0 ? "even" : "odd") << '\n';
      }
      return 0;
    case 4: {
      if (!grid) {
        err << "error: figure 4 is a dense grid; pass --grid to export\n";
        return 1;
      }
      const SttMatrix m(n, 2.0, -1.0);
      const Matrix rinv = inverse_factor(cholesky_factor(m));
      os << "matrix,row,col,value\n";
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          os << "R_inv," << (i + 1) << ',' << (j + 1) << ','
             << io::format_full(rinv(i, j)) << '\n';
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          os << "T_inv," << i << ',' << j << ','
             << io::format_full(laplacian_inverse_entry(n, i, j)) << '\n';
      return 0;
    }
    case 5: {
      oracle::ExperimentConfig cfg;
      cfg.n_min = n_min;
      cfg.n_max = n_max;
      cfg.samples_per_n = samples;
      cfg.seed = g.seed;
      cfg.tie_rtol = g.tie_rtol;
      io::write_experiment_csv(os, oracle::mismatch_experiment(cfg));
      return 0;
    }
    default:
      break;
  }
  return 1;
}

// ------------------------------------------------------------- experiment

int cmd_experiment(std::ostream& os, const GlobalOptions& g, int n_min,
                   int n_max, int samples) {
  oracle::ExperimentConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.samples_per_n = samples;
  cfg.seed = g.seed;
  cfg.tie_rtol = g.tie_rtol;
  const oracle::ExperimentResult result = oracle::mismatch_experiment(cfg);
  switch (g.format) {
    case Format::plain:
      os << "mismatch experiment: n in [" << cfg.n_min << ", " << cfg.n_max
         << "], " << cfg.samples_per_n << " samples per n, seed " << cfg.seed
         << '\n';
      os << "rng: " << oracle::ExperimentResult::kGenerator << " + "
         << oracle::ExperimentResult::kNormalTransform << " (substream "
         << oracle::ExperimentResult::kSubstream << ")\n";
      os << "discard rule: " << oracle::ExperimentResult::kDiscardRule << '\n';
      os << "totals: tested=" << result.totals.tested
         << " discarded=" << result.totals.discarded
         << " ties_skipped=" << result.totals.ties_skipped
         << " mismatches=" << result.totals.mismatches << '\n';
      os << "percentage = " << io::format_plain(result.percentage) << " %\n";
      os << "per n (n: tested/mismatches):\n";
      for (const auto& [dim, counts] : result.per_n) {
        os << "  " << dim << ": " << counts.tested << '/' << counts.mismatches
           << '\n';
      }
      break;
    case Format::csv:
      io::write_experiment_csv(os, result);
      break;
    case Format::json:
      os << io::experiment_json(result) << '\n';
      break;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "tsl: spectra, structured eigenvalue conditioning, and distance to "
      "singularity for symmetric tridiagonal Toeplitz matrices"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config");

  GlobalOptions g;
  std::string format_name = "plain";
  app.add_option("-f,--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->envname("TSL_FORMAT");
  app.add_option("-o,--out", g.out_path, "Write output to a file")
      ->envname("TSL_OUT");
  app.add_option("--seed", g.seed, "RNG seed for sampling commands")
      ->envname("TSL_SEED");
  app.add_option("--tie-rtol", g.tie_rtol,
                 "Relative tolerance for tie detection")
      ->envname("TSL_TIE_RTOL");

  int n = 0;
  ScalarParam delta;
  ScalarParam sigma;
  const auto add_matrix_options = [&](CLI::App* cmd) {
    cmd->add_option("-n,--dim", n, "Matrix dimension (n >= 2)")->required();
    CLI::Option* d = cmd->add_option("-d,--delta", delta.value,
                                     "Diagonal entry");
    CLI::Option* d_expr =
        cmd->add_option("--delta-expr", delta.expression,
                        "Diagonal entry as an expression, e.g. cos(pi/20)");
    d->excludes(d_expr);
    CLI::Option* s = cmd->add_option("-s,--sigma", sigma.value,
                                     "Off-diagonal entry");
    CLI::Option* s_expr =
        cmd->add_option("--sigma-expr", sigma.expression,
                        "Off-diagonal entry as an expression, e.g. "
                        "-sqrt(2)/2");
    s->excludes(s_expr);
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full nearness report: spectrum table, conditioning, "
                 "structured and unstructured distance to singularity");
  add_matrix_options(analyze);

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Closed-form eigenvalues");
  add_matrix_options(spectrum_cmd);

  CLI::App* cholesky_cmd = app.add_subcommand(
      "cholesky", "Bidiagonal Cholesky factor and its monotonicity report");
  add_matrix_options(cholesky_cmd);
  std::string inverse_csv;
  cholesky_cmd->add_option("--inverse-csv", inverse_csv,
                           "Also write the R^-1 structure (row,col,value) "
                           "CSV to this path");

  CLI::App* examples_cmd = app.add_subcommand(
      "examples", "Reproduce a reference example (1-4) with pass/fail "
                  "markers at 5 significant digits");
  int example_id = 0;
  examples_cmd->add_option("id", example_id, "Example id (1-4)")->required();
  std::string rinv_csv;
  examples_cmd->add_option("--rinv-csv", rinv_csv,
                           "Example 1: write the R^-1 structure CSV here");

  CLI::App* figures_cmd = app.add_subcommand(
      "figures", "Emit figure data as CSV (1: kappa per h; 2: worst-case "
                 "perturbation grids, needs --grid; 3: kappa extremes ratio "
                 "per n; 4: R^-1 and T^-1 grids, needs --grid; 5: experiment "
                 "counts)");
  int figure_id = 0;
  figures_cmd->add_option("id", figure_id, "Figure id (1-5)")->required();
  int fig_n = 0;
  figures_cmd->add_option("-n,--dim", fig_n,
                          "Dimension (figures 1, 2, 4; defaults 100/100/1000)");
  int n_min = 2;
  int n_max = 0;
  int samples = 10000;
  bool grid = false;
  figures_cmd->add_option("--n-min", n_min, "Smallest n (figure 5)");
  figures_cmd->add_option("--n-max", n_max,
                          "Largest n (figures 3, 5; defaults 100/50)");
  figures_cmd->add_option("--samples", samples, "Samples per n (figure 5)");
  figures_cmd->add_flag("--grid", grid, "Allow dense grid export (2, 4)");
  bool extremes = false;
  figures_cmd->add_flag("--extremes", extremes,
                        "Figure 1: emit the min/max kappa report instead of "
                        "the full table");

  CLI::App* experiment_cmd = app.add_subcommand(
      "experiment", "Magnitude-vs-ratio minimizer mismatch sampling");
  int exp_n_min = 2;
  int exp_n_max = 50;
  int exp_samples = 10000;
  experiment_cmd->add_option("--n-min", exp_n_min, "Smallest dimension");
  experiment_cmd->add_option("--n-max", exp_n_max, "Largest dimension");
  experiment_cmd->add_option("--samples", exp_samples, "Samples per n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << '\n';
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (format_name == "csv") {
    g.format = Format::csv;
  } else if (format_name == "json") {
    g.format = Format::json;
  } else {
    g.format = Format::plain;
  }

  OutputTarget target(g.out_path, out);
  if (!target.ok()) {
    err << "error: cannot open '" << g.out_path << "' for writing\n";
    return 1;
  }
  std::ostream& os = target.stream();

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(os, g, n, delta.resolve("delta"),
                         sigma.resolve("sigma"));
    }
    if (app.got_subcommand(spectrum_cmd)) {
      return cmd_spectrum(os, g, n, delta.resolve("delta"),
                          sigma.resolve("sigma"));
    }
    if (app.got_subcommand(cholesky_cmd)) {
      return cmd_cholesky(os, g, n, delta.resolve("delta"),
                          sigma.resolve("sigma"), inverse_csv);
    }
    if (app.got_subcommand(examples_cmd)) {
      switch (example_id) {
        case 1:
          return cmd_example_1(os, g, rinv_csv);
        case 2:
          return cmd_example_2(os, g);
        case 3:
          return cmd_example_3(os, g);
        case 4:
          return cmd_example_4(os, g);
        default:
          err << "error: unknown example id " << example_id << " (1-4)\n";
          return 1;
      }
    }
    if (app.got_subcommand(figures_cmd)) {
      if (figure_id < 1 || figure_id > 5) {
        err << "error: unknown figure id " << figure_id << " (1-5)\n";
        return 1;
      }
      if (fig_n == 0) fig_n = figure_id == 4 ? 1000 : 100;
      if (n_max == 0) n_max = figure_id == 5 ? 50 : 100;
      return cmd_figures(os, err, g, figure_id, fig_n, n_min, n_max, samples,
                         grid, extremes);
    }
    if (app.got_subcommand(experiment_cmd)) {
      if (exp_n_min < 2 || exp_n_max < exp_n_min || exp_samples < 1) {
        err << "error: invalid experiment range (need 2 <= n-min <= n-max, "
               "samples >= 1)\n";
        return 1;
      }
      return cmd_experiment(os, g, exp_n_min, exp_n_max, exp_samples);
    }
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const expr::ExprError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace tsl::cli
