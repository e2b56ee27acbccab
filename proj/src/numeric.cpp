#include "buergi/numeric.hpp"

#include <algorithm>
#include <ios>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "buergi/errors.hpp"

namespace buergi {

void check_precision(int digits, int ceiling) {
  const int limit = std::min(ceiling, kMaxPrecision);
  if (digits < 0 || digits > limit) {
    throw ConfigurationError("precision " + std::to_string(digits) +
                             " outside [0, " + std::to_string(limit) + "]");
  }
}

Real pi() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

Integer pow_integer(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(Integer(base), exponent);
}

Real pow10(int exponent) {
  if (exponent >= 0) {
    return to_real(pow_integer(10, static_cast<unsigned>(exponent)));
  }
  return Real(1) / to_real(pow_integer(10, static_cast<unsigned>(-exponent)));
}

Real to_real(const Integer& x) { return Real(x); }

Real to_real(const Rational& x) {
  return Real(boost::multiprecision::numerator(x)) /
         Real(boost::multiprecision::denominator(x));
}

Integer round_half_away(const Real& x) {
  const Real magnitude = boost::multiprecision::floor(
      boost::multiprecision::abs(x) + Real(0.5));
  Integer units = magnitude.convert_to<Integer>();
  return x < 0 ? Integer(-units) : units;
}

Real round_to_places(const Real& x, int places) {
  return to_real(round_half_away(x * pow10(places))) / pow10(places);
}

Real floor_to_places(const Real& x, int places) {
  return boost::multiprecision::floor(x * pow10(places)) / pow10(places);
}

Real ceil_to_places(const Real& x, int places) {
  return boost::multiprecision::ceil(x * pow10(places)) / pow10(places);
}

namespace {

std::string format_units(Integer units, int places) {
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string digits = units.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  if (places == 0) return out + digits;
  const std::size_t split = digits.size() - static_cast<std::size_t>(places);
  return out + digits.substr(0, split) + "." + digits.substr(split);
}

}  // namespace

std::string to_fixed(const Real& x, int places) {
  return format_units(round_half_away(x * pow10(places)), places);
}

Integer round_rational_to_places(const Rational& x, int places) {
  const Rational scaled = x * Rational(pow_integer(10, places));
  Integer num = boost::multiprecision::numerator(scaled);
  const Integer den = boost::multiprecision::denominator(scaled);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer units = (2 * num + den) / (2 * den);
  return negative ? Integer(-units) : units;
}

std::string to_scientific(const Real& x, int significant) {
  return x.str(significant, std::ios_base::scientific);
}

Real sine_series(const Real& x, const Real& tolerance) {
  const Real x2 = x * x;
  Real term = x;
  Real sum = x;
  for (unsigned k = 1; boost::multiprecision::abs(term) >= tolerance; ++k) {
    term *= -x2 / Real((2 * k) * (2 * k + 1));
    sum += term;
  }
  return sum;
}

Real cosine_series(const Real& x, const Real& tolerance) {
  const Real x2 = x * x;
  Real term = 1;
  Real sum = 1;
  for (unsigned k = 1; boost::multiprecision::abs(term) >= tolerance; ++k) {
    term *= -x2 / Real((2 * k - 1) * (2 * k));
    sum += term;
  }
  return sum;
}

}  // namespace buergi
