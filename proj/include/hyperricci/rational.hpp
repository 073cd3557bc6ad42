#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hyperricci {

/// Exact arbitrary-precision fraction. All masses, costs and curvature
/// values in this library are Rationals; no floating point enters any
/// computation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a canonical rational string: an optional-sign integer "p" or a
/// fraction "p/q" with q > 0. Decimal points and exponents are rejected;
/// exactness is part of the file-format contract.
Rational parse_rational(const std::string& text);

/// Lowest-terms representation: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// Truncated decimal rendering with the given number of fraction digits.
/// Convenience output only; never used for computation.
std::string decimal_string(const Rational& value, int digits);

} // namespace hyperricci
