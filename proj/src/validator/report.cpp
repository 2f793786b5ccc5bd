#include "gmrk/validator/report.hpp"

#include <cstdio>

namespace gmrk::validator {

void ResidualReport::decide() { pass = max_abs_residual <= tolerance; }

bool ResidualReport::as_expected() const {
  if (expectation == Expectation::pass) return pass;
  return max_abs_residual >= kFailThreshold;
}

std::string ResidualReport::summary() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-28s residual=%.3e tol=%.1e interior=%d/%d %s%s", check_name.c_str(),
                max_abs_residual, tolerance, interior_size, basis_size, pass ? "PASS" : "FAIL",
                expectation == Expectation::fail ? " (expected fail)" : "");
  return buf;
}

}  // namespace gmrk::validator
