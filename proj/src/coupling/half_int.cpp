#include "gmrk/coupling/half_int.hpp"

#include <charconv>
#include <cmath>

#include "gmrk/errors.hpp"

namespace gmrk::coupling {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidLabelError("not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  if (text.empty()) throw InvalidLabelError("empty half-integer literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const int num = parse_int(text.substr(0, slash), text);
    const int den = parse_int(text.substr(slash + 1), text);
    if (den == 1) return from_int(num);
    if (den != 2) throw InvalidLabelError("denominator must be 1 or 2: '" + std::string(text) + "'");
    return from_twice(num);
  }
  if (text.find('.') != std::string_view::npos) {
    const std::string s(text);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    const double twice = 2.0 * d;
    if (end != s.c_str() + s.size() || std::abs(twice - std::round(twice)) > 1e-12) {
      throw InvalidLabelError("not a half-integer: '" + s + "'");
    }
    return from_twice(static_cast<int>(std::lround(twice)));
  }
  return from_int(parse_int(text, text));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace gmrk::coupling
