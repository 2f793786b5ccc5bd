#pragma once

#include "gmrk/coupling/cg_value.hpp"
#include "gmrk/operators/frame.hpp"

namespace gmrk::operators {

/// alpha = 1/2 sqrt(m(n-m)/n). Throws ConfigError unless 1 <= m_split <= n-1.
double alpha_of(int n, int m_split);
/// alpha as an exact radical, sqrt(m(n-m)/(4n)).
coupling::CgValue alpha_exact(int n, int m_split);

/// sqrt(m(n-m)/n) diag(1/m, ..., 1/m, -1/(n-m), ...): unit norm, traceless.
DenseMatrix x_matrix_of(int n, int m_split);
/// x_matrix_of in the {2} spherical components of `frame`.
DenseVector x_vector_of(const Frame& frame, int m_split);

/// Parameters of one Gell-Mann construction run.
struct GellMannConfig {
  int n = 3;
  int m_split = 1;
  Complex sigma = 0.0;
  double u_norm = 1.0;
  double alpha = 0.0;
  /// Spherical components of x in the {2} representation.
  DenseVector x;
  /// Lets build_U accept an x that the little group does not annihilate
  /// (used to demonstrate failure).
  bool allow_noninvariant_x = false;

  /// alpha and x from n and m_split; sigma as given.
  static GellMannConfig standard(const Frame& frame, int m_split, Complex sigma = 0.0);

  /// Copy with a different sigma.
  GellMannConfig with_sigma(Complex s) const;

  /// Throws ConfigError on a non-unit x, non-positive |u| or alpha < 0.
  void validate(const Frame& frame) const;
};

/// max over L generators of |K_alpha x| in the {2} representation.
double little_group_violation(const Frame& frame, int m_split, const DenseVector& x);

}  // namespace gmrk::operators
