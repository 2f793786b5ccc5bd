#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmrk/coupling/half_int.hpp"
#include "gmrk/operators/frame.hpp"

namespace gmrk::validator {

using coupling::HalfInt;
using operators::Complex;

/// Pass threshold unless a caller overrides it.
inline constexpr double kDefaultTolerance = 1e-10;
/// An expected failure counts only at or above this residual.
inline constexpr double kFailThreshold = 1e-2;

enum class Expectation { pass, fail };

/// Parameters of the run a report was produced from.
struct ConfigSnapshot {
  int n = 3;
  std::string mode;
  HalfInt j_max;
  int m_split = 1;
  Complex sigma = 0.0;
  double alpha = 0.0;
  double u_norm = 1.0;
  std::string x_choice = "standard";
};

struct ResidualReport {
  std::string check_name;
  double max_abs_residual = 0.0;
  HalfInt interior_margin;
  int basis_size = 0;
  int interior_size = 0;
  std::optional<ConfigSnapshot> config;
  double tolerance = kDefaultTolerance;
  bool pass = false;
  Expectation expectation = Expectation::pass;
  /// Named partial residuals or fitted values.
  std::vector<std::pair<std::string, double>> details;

  /// Sets pass from residual and tolerance.
  void decide();
  /// Expected pass: pass. Expected fail: residual >= kFailThreshold.
  bool as_expected() const;
  std::string summary() const;
};

}  // namespace gmrk::validator
