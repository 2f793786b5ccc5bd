#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gmrk::coupling {

/// An integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr static HalfInt from_twice(int twice) { return HalfInt(twice); }
  constexpr static HalfInt from_int(int value) { return HalfInt(2 * value); }

  /// Parses "2", "-1", "3/2", "-5/2" or a decimal ending in .0/.5 ("1.5").
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  /// "3/2", "-1/2", "2", "0".
  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

namespace literals {
constexpr HalfInt operator""_hi(unsigned long long v) { return HalfInt::from_int(static_cast<int>(v)); }
}  // namespace literals

}  // namespace gmrk::coupling
