#pragma once

#include <ostream>

namespace nfcurve::cli {

/// Exit codes: 0 success, 2 validation error, 1 runtime failure.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kValidationError = 2;

/// Default output directory comes from NFCURVE_OUT, else "nfcurve_out".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nfcurve::cli
