#include "buergi/sexagesimal.hpp"

#include <algorithm>
#include <cctype>

#include "buergi/errors.hpp"

namespace buergi::sexagesimal {
namespace {

Integer scale(int places) {
  return pow_integer(60, static_cast<unsigned>(places));
}

// Rescale a's units to `places` >= a.places().
Integer widen(const Sexagesimal& a, int places) {
  return a.units() * scale(places - a.places());
}

int parse_digit(std::string_view token, std::string_view text) {
  const bool numeric =
      !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
  if (!numeric) {
    throw ParseError("malformed sexagesimal '" + std::string(text) + "'");
  }
  const auto first = token.find_first_not_of('0');
  if (first != std::string_view::npos && token.size() - first > 2) {
    throw MalformedDigitError("digit '" + std::string(token) +
                              "' out of range 0..59");
  }
  const int digit = std::stoi(std::string(token));
  if (digit >= 60) {
    throw MalformedDigitError("digit " + std::to_string(digit) +
                              " out of range 0..59");
  }
  return digit;
}

std::vector<int> parse_digits(std::string_view part, std::string_view text) {
  std::vector<int> digits;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = part.find(',', begin);
    digits.push_back(parse_digit(part.substr(begin, comma - begin), text));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return digits;
}

}  // namespace

Sexagesimal::Sexagesimal(Integer units, int places)
    : units_(std::move(units)), places_(places) {}

Sexagesimal Sexagesimal::from_units(Integer units, int places) {
  if (places < 0) throw DomainError("negative sexagesimal place count");
  return Sexagesimal(std::move(units), places);
}

std::vector<int> Sexagesimal::integer_digits() const {
  Integer whole = boost::multiprecision::abs(units_) / scale(places_);
  std::vector<int> digits;
  do {
    digits.push_back(static_cast<int>(whole % 60));
    whole /= 60;
  } while (whole != 0);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<int> Sexagesimal::fraction_digits() const {
  Integer frac = boost::multiprecision::abs(units_) % scale(places_);
  std::vector<int> digits(static_cast<std::size_t>(places_));
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    *it = static_cast<int>(frac % 60);
    frac /= 60;
  }
  return digits;
}

Rational Sexagesimal::value() const { return Rational(units_, scale(places_)); }

Real Sexagesimal::to_real() const { return buergi::to_real(value()); }

Sexagesimal Sexagesimal::rounded(int places) const {
  if (places < 0) throw DomainError("negative sexagesimal place count");
  if (places >= places_) return Sexagesimal(widen(*this, places), places);
  const Integer divisor = scale(places_ - places);
  const Integer magnitude =
      (2 * boost::multiprecision::abs(units_) + divisor) / (2 * divisor);
  return Sexagesimal(units_ < 0 ? Integer(-magnitude) : magnitude, places);
}

std::string Sexagesimal::to_string() const {
  std::string out = sign() < 0 ? "-" : "";
  const auto whole = integer_digits();
  for (std::size_t i = 0; i < whole.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(whole[i]);
  }
  const auto frac = fraction_digits();
  for (std::size_t i = 0; i < frac.size(); ++i) {
    out += i == 0 ? ';' : ',';
    out += std::to_string(frac[i]);
  }
  return out;
}

bool operator==(const Sexagesimal& a, const Sexagesimal& b) {
  const int places = std::max(a.places_, b.places_);
  return widen(a, places) == widen(b, places);
}

Sexagesimal parse_sexagesimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty sexagesimal string");
  std::string_view body = text;
  const bool negative = body.front() == '-';
  if (negative) body.remove_prefix(1);
  if (body.empty()) throw ParseError("sign without digits");

  const std::size_t radix = body.find(';');
  const auto whole = parse_digits(body.substr(0, radix), text);
  std::vector<int> frac;
  if (radix != std::string_view::npos) {
    frac = parse_digits(body.substr(radix + 1), text);
  }

  Integer units = 0;
  for (int d : whole) units = units * 60 + d;
  for (int d : frac) units = units * 60 + d;
  if (negative) units = -units;
  return Sexagesimal::from_units(std::move(units), static_cast<int>(frac.size()));
}

Sexagesimal to_sexagesimal(const Real& x, int places) {
  if (places < 0) throw DomainError("negative sexagesimal place count");
  return Sexagesimal::from_units(round_half_away(x * to_real(scale(places))),
                                 places);
}

std::string format_sexagesimal(const Real& x, int places) {
  return to_sexagesimal(x, places).to_string();
}

Sexagesimal sexa_add(const Sexagesimal& a, const Sexagesimal& b) {
  const int places = std::max(a.places(), b.places());
  return Sexagesimal::from_units(widen(a, places) + widen(b, places), places);
}

Sexagesimal sexa_sub(const Sexagesimal& a, const Sexagesimal& b) {
  const int places = std::max(a.places(), b.places());
  return Sexagesimal::from_units(widen(a, places) - widen(b, places), places);
}

Sexagesimal sexa_mul(const Sexagesimal& a, const Sexagesimal& b) {
  return Sexagesimal::from_units(a.units() * b.units(),
                                 a.places() + b.places());
}

Sexagesimal sexa_sqrt(const Sexagesimal& a, int places) {
  if (a.units() < 0) throw DomainError("square root of a negative value");
  if (places < 0) throw DomainError("negative sexagesimal place count");
  // sqrt(a) * 60^places = sqrt(units * 60^(2*places - a.places)).
  const int shift = 2 * places - a.places();
  const Integer radicand = shift >= 0
                               ? Integer(a.units() * scale(shift))
                               : Integer(a.units() / scale(-shift));
  Integer root = boost::multiprecision::sqrt(radicand);
  if (radicand - root * root > root) ++root;
  return Sexagesimal::from_units(std::move(root), places);
}

}  // namespace buergi::sexagesimal
