#pragma once

// Command dispatch for the skewgin tool. Every command returns a JSON report
// and an exit code: 0 when all checks pass, 1 when a check fails, 2 for
// unusable input.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "skewgin/document.hpp"

namespace skewgin {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommandOptions {
  bool check = false;                     ///< ginzburg: evaluate d^2
  std::optional<int> cy_dimension;        ///< overrides the document's cy_dimension
  std::optional<std::size_t> max_len;     ///< reduce / transport / verify truncation
  std::optional<std::size_t> weyl_n;
  std::optional<std::size_t> filtration;
  std::optional<std::size_t> cap;
  std::optional<nlohmann::json> matrices;  ///< weyl: contents of the --matrices file
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitPass;
};

/// One of validate, ginzburg, invariance, reduce, transport, verify, weyl.
/// Library errors are turned into an error report, never rethrown.
CommandResult run(const std::string& command, const ProblemDocument& doc, const CommandOptions& options);

/// Report for an error raised before or during a command.
CommandResult error_result(const std::string& command, const Error& error);

/// 1 for errors that are themselves a failed check (non-invariant W,
/// non-symplectic matrix, failed transport), 2 otherwise.
int exit_code_for(ErrorCode code);

/// Stable serialization used for all reports: two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace skewgin
