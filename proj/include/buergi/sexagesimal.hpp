#pragma once

// Signed base-60 fixed-point numbers in the usual history-of-science
// notation: comma-separated digits, a semicolon as the radix point,
// e.g. "1,24;51,10" = 84 + 51/60 + 10/3600.

#include <string>
#include <string_view>
#include <vector>

#include "buergi/numeric.hpp"

namespace buergi::sexagesimal {

// Exact value units / 60^places. Immutable; every operation returns a new
// value. Zero always carries sign +1.
class Sexagesimal {
 public:
  Sexagesimal() = default;

  // Throws DomainError for negative places.
  static Sexagesimal from_units(Integer units, int places);

  int sign() const { return units_ < 0 ? -1 : +1; }
  int places() const { return places_; }
  // Signed count of 60^-places units.
  const Integer& units() const { return units_; }

  // Most significant first; {0} when the integer part is zero.
  std::vector<int> integer_digits() const;
  // Exactly places() digits.
  std::vector<int> fraction_digits() const;

  Rational value() const;
  Real to_real() const;

  // Round (half away from zero) or pad to the given number of places.
  Sexagesimal rounded(int places) const;

  std::string to_string() const;

  // Value equality: "0;30" == "0;30,0".
  friend bool operator==(const Sexagesimal& a, const Sexagesimal& b);

 private:
  Sexagesimal(Integer units, int places);

  Integer units_ = 0;
  int places_ = 0;
};

// Grammar: [-]?d(,d)*(;d(,d)*)? with each d in 0..59.
// Throws MalformedDigitError for a digit >= 60, ParseError otherwise.
Sexagesimal parse_sexagesimal(std::string_view text);

Sexagesimal to_sexagesimal(const Real& x, int places);
// Rounds half away from zero at the last place.
std::string format_sexagesimal(const Real& x, int places);

// Exact; the result carries max(places) for add/sub and the sum of places
// for mul.
Sexagesimal sexa_add(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal sexa_sub(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal sexa_mul(const Sexagesimal& a, const Sexagesimal& b);
// Square root rounded to `places`; within one unit of the last place.
// Throws DomainError for negative input.
Sexagesimal sexa_sqrt(const Sexagesimal& a, int places);

}  // namespace buergi::sexagesimal
