// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "movwall/cli/config.hpp"

namespace movwall::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitOracleDisagreement = 3;

struct CommandResult {
  std::string output;              ///< CSV or JSON document
  std::optional<std::string> svg;  ///< plot, when the command produces one
  int exit_code = kExitOk;
  std::string diagnostic;          ///< explanation for a non-zero exit code
};

CommandResult cmd_bc(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_berry(const RunConfig& cfg);
CommandResult cmd_wz(const RunConfig& cfg);
CommandResult cmd_adiabatic(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandResult run_command(const RunConfig& cfg);

/// Full command line entry point. Writes the document to --out (or `out`),
/// the resolved config to <out>.config.json, the plot to --plot, and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace movwall::cli
