#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace cauchy_jump::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, input_error = 2, numerical_error = 3 };

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Checks that `text` is a report this tool could have written: valid JSON
/// with command, version, status and either inputs/results/wall_time or an
/// error object.
bool validate_report(std::string_view text, std::string* reason = nullptr);

}  // namespace cauchy_jump::cli
