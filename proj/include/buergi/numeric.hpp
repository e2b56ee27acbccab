#pragma once

// Number types shared by every module plus the handful of high-precision
// helpers (rounding, fixed-point printing, Taylor kernels) they build on.

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace buergi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Working real type. 110 significant decimal digits leaves room for the
// largest precision ceiling plus guard digits.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<110>,
    boost::multiprecision::et_off>;

// Largest decimal precision any operation accepts, whatever the configured
// ceiling says.
inline constexpr int kMaxPrecision = 90;
inline constexpr int kDefaultPrecisionCeiling = 50;
// Extra digits carried internally beyond a requested precision.
inline constexpr int kGuardDigits = 10;

// Throws ConfigurationError unless 0 <= digits <= min(ceiling, kMaxPrecision).
void check_precision(int digits, int ceiling = kDefaultPrecisionCeiling);

Real pi();
Real pow10(int exponent);
Integer pow_integer(unsigned base, unsigned exponent);

Real to_real(const Integer& x);
Real to_real(const Rational& x);

// Nearest integer, ties away from zero.
Integer round_half_away(const Real& x);
// x rounded to `places` digits after the decimal point, ties away from zero.
Real round_to_places(const Real& x, int places);
Real floor_to_places(const Real& x, int places);
Real ceil_to_places(const Real& x, int places);

// Fixed-point decimal text with exactly `places` digits after the point,
// rounded half away from zero. Never uses exponent notation.
std::string to_fixed(const Real& x, int places);
// Exact rational rounded half away from zero to `places` decimals.
Integer round_rational_to_places(const Rational& x, int places);

// Short scientific rendering for reports (e.g. "1.23e-10").
std::string to_scientific(const Real& x, int significant = 3);

// Truncated Taylor series, summed until the next term falls below
// `tolerance`. Both expect |x| <= pi/4; the alternating tail is then bounded
// by the first omitted term.
Real sine_series(const Real& x, const Real& tolerance);
Real cosine_series(const Real& x, const Real& tolerance);

}  // namespace buergi
