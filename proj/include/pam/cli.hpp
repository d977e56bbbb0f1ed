#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out` as JSON lines (or plain text with --format text); diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pam::cli
