#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glacm::cli {

/// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. JSON (or DOT) goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glacm::cli
