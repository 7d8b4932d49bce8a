#pragma once

namespace tsl {

/// Relative tolerance deciding whether two eigenvalue magnitudes (or two
/// distance ratios) count as tied. Overridable per call; the CLI exposes
/// it as --tie-rtol / TSL_TIE_RTOL.
inline constexpr double kDefaultTieRtol = 1e-12;

/// Eigenpair residual tolerance, scaled by |delta| + 2|sigma| + 1.
inline constexpr double kResidualTol = 1e-10;

/// Max-norm tolerance for eigenvector orthonormality.
inline constexpr double kOrthonormalityTol = 1e-10;

/// Default cap on the dimension of dense realizations.
inline constexpr int kDenseSizeCap = 4096;

}  // namespace tsl
