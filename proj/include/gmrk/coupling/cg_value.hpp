#pragma once

#include <string>

#include "gmrk/coupling/irrep.hpp"

namespace gmrk::coupling {

/// Exact signed square root of a non-negative rational: sign * sqrt(radicand).
///
/// Closed under multiplication. Sums of distinct radicals leave this domain,
/// so callers add coupling coefficients only after to_double().
class CgValue {
 public:
  CgValue() = default;
  /// sign in {-1, 0, +1}; a zero radicand forces sign 0.
  CgValue(int sign, Rational radicand);

  static CgValue zero() { return {}; }
  static CgValue one() { return {1, Rational(1)}; }
  /// The value whose square is r with the sign of r's root chosen by `sign`.
  static CgValue sqrt_of(const Rational& r, int sign = 1) { return {sign, r}; }
  /// Exact value of a rational q (radicand q^2).
  static CgValue from_rational(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  /// sign * radicand, i.e. the signed square of the value.
  Rational signed_square() const { return sign_ * radicand_; }

  double to_double() const;
  /// "+sqrt(1/3)", "-sqrt(2)", "0".
  std::string to_string() const;

  CgValue operator*(const CgValue& o) const;
  CgValue operator-() const { return {-sign_, radicand_}; }
  bool operator==(const CgValue& o) const { return sign_ == o.sign_ && radicand_ == o.radicand_; }

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

}  // namespace gmrk::coupling
