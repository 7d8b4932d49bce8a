#pragma once

#include <iosfwd>

namespace tsl::cli {

/// Full command dispatch of the tsl tool; main() is a thin wrapper so
/// tests can drive the CLI in process. Returns the process exit code:
/// 0 success, 1 usage or parse error, 2 domain error (sigma = 0,
/// non-definite input where definiteness is required, resource caps),
/// 4 reference-value comparison failure in `examples`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tsl::cli
