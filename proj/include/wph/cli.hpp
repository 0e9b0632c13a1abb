#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wph/core.hpp"

namespace wph::cli {

inline constexpr const char* kVersion = "wph 0.1.0";

enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kBudgetError = 3,
};

/// Runs one command line (without the program name). Writes the output
/// document to `out` and diagnostics to `err`; returns an ExitStatus.
/// Budgets come from the environment (see budgets_from_env).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Budgets& budgets);

}  // namespace wph::cli
