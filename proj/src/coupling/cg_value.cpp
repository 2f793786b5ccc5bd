#include "gmrk/coupling/cg_value.hpp"

#include <cmath>

#include "gmrk/errors.hpp"

namespace gmrk::coupling {

CgValue::CgValue(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::invalid_argument("CgValue radicand must be non-negative");
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("CgValue sign must be -1, 0 or +1");
  if (radicand_ == 0 || sign_ == 0) {
    sign_ = 0;
    radicand_ = 0;
  }
}

CgValue CgValue::from_rational(const Rational& q) {
  if (q == 0) return zero();
  return {q > 0 ? 1 : -1, q * q};
}

double CgValue::to_double() const {
  if (sign_ == 0) return 0.0;
  // sqrt(num)/sqrt(den) keeps full precision when num, den are exact in double.
  const double num = numerator(radicand_).convert_to<double>();
  const double den = denominator(radicand_).convert_to<double>();
  return sign_ * std::sqrt(num) / std::sqrt(den);
}

std::string CgValue::to_string() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ > 0 ? "+" : "-") + "sqrt(" + radicand_.str() + ")";
}

CgValue CgValue::operator*(const CgValue& o) const {
  return {sign_ * o.sign_, radicand_ * o.radicand_};
}

}  // namespace gmrk::coupling
