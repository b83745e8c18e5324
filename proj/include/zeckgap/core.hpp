#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeckgap {

inline constexpr std::string_view kVersion = "0.1.0";

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user input: malformed specs, out-of-range arguments, bad config.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its enumeration or table-size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Raised when a gap measure is requested for a decomposition with a single
/// summand (k = 1): such values carry no gaps and are excluded from
/// individual-measure statistics.
class NoGapsError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-convergent root finding, degenerate fits.
class NumericError : public Error {
 public:
  using Error::Error;
};

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

}  // namespace zeckgap
