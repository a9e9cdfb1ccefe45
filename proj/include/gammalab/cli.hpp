#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammalab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { kPass = 0, kFail = 1, kInput = 2, kBudget = 3 };

/// Runs one command; `args` excludes the program name. The report goes to
/// `out` (JSON by default), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammalab::cli
