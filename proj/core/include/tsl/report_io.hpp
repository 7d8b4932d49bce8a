#pragma once

#include <iosfwd>
#include <string>

#include "tsl/cholesky.hpp"
#include "tsl/distance.hpp"
#include "tsl/experiment.hpp"
#include "tsl/matrix.hpp"
#include "tsl/sensitivity.hpp"
#include "tsl/stt.hpp"

/// CSV and JSON emitters. CSV is comma-separated with a header row and
/// LF line endings; machine formats carry 17 significant digits, plain
/// text 5 (scientific notation, as the tables print them).
namespace tsl::io {

std::string format_full(double v);   // %.17g
std::string format_plain(double v);  // %.4e

/// h,kappa rows for h = 1..n.
void write_condition_csv(std::ostream& os, int n);

/// role,h,kappa,asymptotic_estimate rows for the extremes report.
void write_extremes_csv(std::ostream& os, const ConditionExtremes& ex);

/// h,lambda,kappa,ratio rows over the full spectrum.
void write_analysis_csv(std::ostream& os, const SttMatrix& m);

/// h,lambda rows.
void write_spectrum_csv(std::ostream& os, const SttMatrix& m);

/// i,r_diag,r_super rows of the factor entries (r_super empty on the
/// last row).
void write_factor_csv(std::ostream& os, const CholeskyFactor& f);

/// row,col,value rows of a dense matrix; when upper_only is set, only
/// the upper triangle (the structure of a bidiagonal-factor inverse) is
/// emitted. Indices are 1-based.
void write_grid_csv(std::ostream& os, const Matrix& a, bool upper_only = false);

/// n,tested,discarded,ties_skipped,mismatches rows.
void write_experiment_csv(std::ostream& os,
                          const oracle::ExperimentResult& result);

/// JSON renderings (single object, schema-stable field names).
std::string report_json(const NearestSingularReport& report);
std::string experiment_json(const oracle::ExperimentResult& result);

/// Parses report_json output back; field-for-field inverse.
NearestSingularReport report_from_json(const std::string& text);

}  // namespace tsl::io
