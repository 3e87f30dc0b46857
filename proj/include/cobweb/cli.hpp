#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobweb {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// Environment variable overriding the default search/enumeration budget.
inline constexpr const char* kBudgetEnv = "COBWEB_BUDGET";

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobweb
