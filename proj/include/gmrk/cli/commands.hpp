#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gmrk/cli/run_config.hpp"
#include "gmrk/validator/report.hpp"

namespace gmrk::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run_basis(const RunConfig& cfg, std::ostream& out);
/// Throws UnsupportedSpaceError when the closed-form T is requested on the full space.
int run_generators(const RunConfig& cfg, std::ostream& out);
int run_validate(const RunConfig& cfg, std::ostream& out);
int run_scan(const RunConfig& cfg, std::ostream& out);

/// The reports `validate` emits for cfg.
std::vector<validator::ResidualReport> validation_reports(const RunConfig& cfg);

/// Validates cfg, runs its subcommand and maps configuration errors to exit 2.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmrk::cli
