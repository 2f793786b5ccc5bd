#pragma once

#include <string>
#include <vector>

#include "gmrk/validator/checks.hpp"

namespace gmrk::validator {

enum class XChoice { standard, perturbed };

std::string to_string(XChoice x);

/// One configuration of the validity scan.
struct ScanEntry {
  repspace::SpaceSpec space;
  XChoice x = XChoice::standard;
  Complex sigma = 0.0;

  /// The formula is expected to close only on a coset space with the diagonal x.
  bool expected_pass() const;
  /// "n=3 coset m=1 x=standard".
  std::string key() const;
};

struct ScanRow {
  ScanEntry entry;
  ResidualReport report;
  /// Classification matches expected_pass().
  bool agrees = false;
};

/// Diagonal x plus 0.1 of a non-invariant off-diagonal direction, renormalized.
operators::DenseVector perturbed_x(const operators::Frame& frame, int m_split);

/// For each m_split: full space, coset space, and coset space with a perturbed x.
std::vector<ScanEntry> default_grid(int n, HalfInt j_max, Complex sigma = 0.0);

/// One check_TT report per entry, in entry order. Entries run concurrently.
std::vector<ScanRow> validity_scan(const std::vector<ScanEntry>& entries, double tolerance = kDefaultTolerance,
                                   HalfInt margin = HalfInt::from_int(4),
                                   coupling::PhaseConvention conv = coupling::PhaseConvention::condon_shortley);

}  // namespace gmrk::validator
