#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmrk/coupling/clebsch_gordan.hpp"
#include "gmrk/repspace/basis.hpp"
#include "gmrk/validator/report.hpp"

namespace gmrk::cli {

enum class Subcommand { basis, generators, validate, scan };
enum class OutputFormat { json, csv };

/// Environment variable that overrides the default tolerance.
inline constexpr const char* kToleranceEnv = "GMRK_TOLERANCE";

struct RunConfig {
  Subcommand subcommand = Subcommand::basis;
  int n = 3;
  coupling::HalfInt j_max = coupling::HalfInt::from_int(2);
  repspace::SpaceMode mode = repspace::SpaceMode::full;
  int m_split = 1;
  validator::Complex sigma = 0.0;
  double tolerance = validator::kDefaultTolerance;
  /// Unset: each check uses its own default margin.
  std::optional<coupling::HalfInt> margin;
  /// Empty: standard output. For CSV operator output, a directory.
  std::string output_path;
  OutputFormat format = OutputFormat::json;
  /// Operator symbols for `generators`; empty picks the mode default.
  std::vector<std::string> operators;
  coupling::PhaseConvention convention = coupling::PhaseConvention::condon_shortley;

  repspace::SpaceSpec space() const { return {n, j_max, mode, m_split}; }
};

std::string to_string(Subcommand s);
std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);
coupling::PhaseConvention parse_convention(const std::string& text);
std::string to_string(coupling::PhaseConvention c);

/// "2.5", "-1e-3", "1+2i", "0.5-i", "3i", "(1,2)". Throws ConfigError.
validator::Complex parse_complex(const std::string& text);

/// Throws ConfigError for n outside {3, 4}, a bad m_split, negative j_max,
/// margin or tolerance.
void validate(const RunConfig& cfg);

}  // namespace gmrk::cli
