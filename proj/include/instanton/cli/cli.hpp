#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace instanton::cli {

inline constexpr const char* kToolName = "instanton-arith";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success or all verdicts true, 1 some verdict false,
/// 2 usage or input error, 3 internal error.
enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kUsage = 2, kInternal = 3 };

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics and text-mode errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace instanton::cli
