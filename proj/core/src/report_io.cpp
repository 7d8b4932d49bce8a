#include "tsl/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace tsl::io {

namespace {

using nlohmann::json;

json candidate_json(const SingularCandidate& c) {
  return json{{"h", c.h},
              {"delta_star", c.delta_star},
              {"sigma_star", c.sigma_star},
              {"distance_f", c.distance_f}};
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_plain(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", v);
  return buf;
}

void write_condition_csv(std::ostream& os, int n) {
  os << "h,kappa\n";
  for (int h = 1; h <= n; ++h) {
    os << h << ',' << format_full(structured_condition_number(n, h)) << '\n';
  }
}

void write_extremes_csv(std::ostream& os, const ConditionExtremes& ex) {
  os << "role,h,kappa,asymptotic_estimate\n";
  for (int h : ex.min_indices) {
    os << "min," << h << ',' << format_full(ex.kappa_min) << ','
       << format_full(ex.min_estimate) << '\n';
  }
  for (int h : ex.max_indices) {
    os << "max," << h << ',' << format_full(ex.kappa_max) << ','
       << format_full(ex.max_estimate) << '\n';
  }
}

void write_analysis_csv(std::ostream& os, const SttMatrix& m) {
  os << "h,lambda,kappa,ratio\n";
  for (int h = 1; h <= m.n; ++h) {
    const double lambda = eigenvalue(m, h);
    const double kappa = structured_condition_number(m.n, h);
    os << h << ',' << format_full(lambda) << ',' << format_full(kappa) << ','
       << format_full(std::abs(lambda) / kappa) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const SttMatrix& m) {
  os << "h,lambda\n";
  for (int h = 1; h <= m.n; ++h) {
    os << h << ',' << format_full(eigenvalue(m, h)) << '\n';
  }
}

void write_factor_csv(std::ostream& os, const CholeskyFactor& f) {
  os << "i,r_diag,r_super\n";
  const int n = f.n();
  for (int i = 1; i <= n; ++i) {
    os << i << ',' << format_full(f.diag[static_cast<std::size_t>(i - 1)])
       << ',';
    if (i < n) os << format_full(f.super[static_cast<std::size_t>(i - 1)]);
    os << '\n';
  }
}

void write_grid_csv(std::ostream& os, const Matrix& a, bool upper_only) {
  os << "row,col,value\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = upper_only ? i : 0; j < a.cols(); ++j) {
      os << (i + 1) << ',' << (j + 1) << ',' << format_full(a(i, j)) << '\n';
    }
  }
}

void write_experiment_csv(std::ostream& os,
                          const oracle::ExperimentResult& result) {
  os << "n,tested,discarded,ties_skipped,mismatches\n";
  for (const auto& [n, counts] : result.per_n) {
    os << n << ',' << counts.tested << ',' << counts.discarded << ','
       << counts.ties_skipped << ',' << counts.mismatches << '\n';
  }
}

std::string report_json(const NearestSingularReport& report) {
  json minimizers = json::array();
  for (const SingularCandidate& c : report.minimizers)
    minimizers.push_back(candidate_json(c));
  const json j{{"n", report.n},
               {"delta", report.delta},
               {"sigma", report.sigma},
               {"minimizers", minimizers},
               {"structured_distance_f", report.structured_distance_f},
               {"unstructured_distance", report.unstructured_distance},
               {"unstructured_minimizer_indices",
                report.unstructured_minimizer_indices},
               {"unique", report.unique},
               {"definite", report.definite},
               {"spectral_lower", report.spectral_lower},
               {"spectral_upper", report.spectral_upper}};
  return j.dump(2);
}

NearestSingularReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  NearestSingularReport report;
  report.n = j.at("n").get<int>();
  report.delta = j.at("delta").get<double>();
  report.sigma = j.at("sigma").get<double>();
  for (const json& c : j.at("minimizers")) {
    report.minimizers.push_back({c.at("h").get<int>(),
                                 c.at("delta_star").get<double>(),
                                 c.at("sigma_star").get<double>(),
                                 c.at("distance_f").get<double>()});
  }
  report.structured_distance_f = j.at("structured_distance_f").get<double>();
  report.unstructured_distance = j.at("unstructured_distance").get<double>();
  report.unstructured_minimizer_indices =
      j.at("unstructured_minimizer_indices").get<std::vector<int>>();
  report.unique = j.at("unique").get<bool>();
  report.definite = j.at("definite").get<bool>();
  report.spectral_lower = j.at("spectral_lower").get<double>();
  report.spectral_upper = j.at("spectral_upper").get<double>();
  return report;
}

std::string experiment_json(const oracle::ExperimentResult& result) {
  json per_n = json::array();
  for (const auto& [n, counts] : result.per_n) {
    per_n.push_back(json{{"n", n},
                         {"tested", counts.tested},
                         {"discarded", counts.discarded},
                         {"ties_skipped", counts.ties_skipped},
                         {"mismatches", counts.mismatches}});
  }
  const json j{
      {"n_min", result.config.n_min},
      {"n_max", result.config.n_max},
      {"samples_per_n", result.config.samples_per_n},
      {"seed", result.config.seed},
      {"tie_rtol", result.config.tie_rtol},
      {"tested", result.totals.tested},
      {"discarded", result.totals.discarded},
      {"ties_skipped", result.totals.ties_skipped},
      {"mismatches", result.totals.mismatches},
      {"percentage", result.percentage},
      {"rng",
       {{"generator", oracle::ExperimentResult::kGenerator},
        {"normal_transform", oracle::ExperimentResult::kNormalTransform},
        {"substream", oracle::ExperimentResult::kSubstream},
        {"discard_rule", oracle::ExperimentResult::kDiscardRule}}},
      {"per_n", per_n}};
  return j.dump(2);
}

}  // namespace tsl::io
