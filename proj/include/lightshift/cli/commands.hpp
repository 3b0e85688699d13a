#pragma once

#include <array>
#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lightshift/cli/config.hpp"

namespace lightshift::cli {

enum class ExitCode : int {
  success = 0,
  check_failed = 1,
  config_error = 2,
  domain_error = 3,
  infeasible = 4,
};

inline constexpr std::array<std::string_view, 6> kSubcommands = {
    "coeffs", "scan", "heff", "oracle-diff", "bichromatic", "rephasing"};

struct CommandOptions {
  bool scan = false;  ///< bichromatic: emit the merit-scan CSV instead of one point
};

/// Runs one subcommand and writes its data artifact (CSV or JSON) to `out`.
/// Library and configuration errors propagate as exceptions; a failed
/// oracle check is reported through the return value.
ExitCode run_subcommand(std::string_view name, const RunConfig& config,
                        const CommandOptions& options, std::ostream& out);

/// Exit status for an exception escaping run_subcommand.
ExitCode exit_code_for(const std::exception& error);

/// One-line JSON object {"error": kind, "message": ..., ["line": n]}.
std::string error_json(const std::exception& error);

/// Shortest decimal that reads back to the same double (at most 17
/// significant digits); negative zero prints as 0.
std::string format_double(double value);

}  // namespace lightshift::cli
