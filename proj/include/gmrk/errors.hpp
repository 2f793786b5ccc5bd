#pragma once

#include <stdexcept>
#include <string>

namespace gmrk {

/// Malformed representation or magnetic label (negative j, wrong parity, mixed rank).
class InvalidLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration value outside its valid range (n, m_split, x vector, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation requested on a space it is not defined on.
class UnsupportedSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A tensor-component family that lacks one of its components.
class MissingComponentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gmrk
