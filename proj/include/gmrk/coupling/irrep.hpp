#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gmrk/coupling/half_int.hpp"

namespace gmrk::coupling {

using Rational = boost::multiprecision::cpp_rational;

/// Spin(n) irrep tag. One SU(2) spin for n=3; the (j1, j2) pair of
/// Spin(4) = SU(2) x SU(2) for n=4.
class IrrepLabel {
 public:
  /// The n=3 trivial label.
  IrrepLabel() = default;
  static IrrepLabel spin3(HalfInt j);
  static IrrepLabel spin4(HalfInt j1, HalfInt j2);
  static IrrepLabel trivial(int n);
  /// Builds a label from parts; throws InvalidLabelError on a bad rank or negative part.
  static IrrepLabel from_parts(int n, std::span<const HalfInt> parts);

  /// Symmetric traceless second-rank tensor {2}: j=2 for n=3, (1,1) for n=4.
  static IrrepLabel symmetric_tensor(int n);
  /// Defining vector {1}: j=1 for n=3, (1/2,1/2) for n=4.
  static IrrepLabel vector(int n);

  int n() const { return n_; }
  int factor_count() const { return n_ == 3 ? 1 : 2; }
  std::span<const HalfInt> parts() const { return {parts_.data(), static_cast<size_t>(factor_count())}; }
  HalfInt part(int f) const { return parts_[static_cast<size_t>(f)]; }

  /// Truncation level: j for n=3, j1+j2 for n=4.
  HalfInt level() const;
  /// True for double-cover (spinor) irreps: half-integer j (n=3) or half-integer j1+j2 (n=4).
  bool is_spinorial() const;

  std::string to_string() const;

  auto operator<=>(const IrrepLabel& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = level() <=> o.level(); c != 0) return c;
    return parts_ <=> o.parts_;
  }
  bool operator==(const IrrepLabel& o) const = default;

 private:
  IrrepLabel(int n, std::array<HalfInt, 2> parts) : n_(n), parts_(parts) {}
  int n_ = 3;
  std::array<HalfInt, 2> parts_{};
};

/// Magnetic multi-index: one projection per SU(2) factor.
class Magnetic {
 public:
  Magnetic() = default;
  explicit Magnetic(HalfInt m) : count_(1), parts_{m, HalfInt{}} {}
  Magnetic(HalfInt m1, HalfInt m2) : count_(2), parts_{m1, m2} {}

  int count() const { return count_; }
  HalfInt part(int f) const { return parts_[static_cast<size_t>(f)]; }
  void set_part(int f, HalfInt v) { parts_[static_cast<size_t>(f)] = v; }
  std::span<const HalfInt> parts() const { return {parts_.data(), static_cast<size_t>(count_)}; }
  std::string to_string() const;

  auto operator<=>(const Magnetic&) const = default;

 private:
  int count_ = 0;
  std::array<HalfInt, 2> parts_{};
};

/// dim(J): 2j+1, or (2j1+1)(2j2+1).
int dim(const IrrepLabel& label);

/// C2(J) normalized as 1/2 sum_ab M_ab^2: j(j+1) for n=3, 2(j1(j1+1)+j2(j2+1)) for n=4.
Rational casimir2(const IrrepLabel& label);

/// All magnetic multi-indices of J, lexicographic with each part ascending.
std::vector<Magnetic> magnetic_states(const IrrepLabel& label);

/// Position of m inside magnetic_states(label); -1 when m is not a state of label.
int magnetic_position(const IrrepLabel& label, const Magnetic& m);

/// Every label of rank n with level <= max_level, in label order.
std::vector<IrrepLabel> labels_up_to(int n, HalfInt max_level);

}  // namespace gmrk::coupling
