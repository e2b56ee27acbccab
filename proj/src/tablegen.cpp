#include "buergi/tablegen.hpp"

#include <algorithm>

#include "buergi/errors.hpp"
#include "buergi/kunstweg.hpp"

namespace buergi::tablegen {
namespace {

using boost::multiprecision::abs;

void check_step(int step) {
  if (step <= 0 || 5400 % step != 0) {
    throw ConfigurationError("table step must divide 5400 arcminutes");
  }
}

Real arcsine_series(const Real& s, const Real& tolerance) {
  // asin s = sum (2k)! / (4^k (k!)^2 (2k+1)) s^(2k+1)
  const Real s2 = s * s;
  Real power = s;
  Real coefficient = 1;
  Real sum = s;
  for (unsigned k = 1;; ++k) {
    power *= s2;
    coefficient *= Real(2 * k - 1) / Real(2 * k);
    const Real term = coefficient * power / Real(2 * k + 1);
    sum += term;
    if (term < tolerance) break;
  }
  return sum;
}

}  // namespace

SineTable kunstweg_table(int step, int precision) {
  check_step(step);
  check_precision(precision);
  const auto n = static_cast<std::size_t>(5400 / step);
  const auto run = kunstweg::iterate(kunstweg::DyadicVector::linear_ramp(n),
                                     kunstweg::TargetDigits{precision});
  const auto values =
      kunstweg::normalize(run.state, precision + kGuardDigits, kMaxPrecision);
  std::vector<SineEntry> entries;
  entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    entries.push_back({static_cast<int>(j + 1) * step, values[j]});
  }
  return SineTable(step, std::move(entries), precision, Provenance::kunstweg,
                   pow10(-precision));
}

SineTable degree_table(int precision) { return kunstweg_table(60, precision); }

Real naive_sin1_minute(const Real& sin1deg) { return sin1deg / 60; }

Real sin1_minute_seed(const Real& sin1deg, int precision) {
  check_precision(precision);
  if (sin1deg <= 0 || sin1deg >= 1) {
    throw DomainError("sin 1deg must lie in (0, 1)");
  }
  const Real tolerance = pow10(-std::min(precision + 20, 105));
  const Real arc = arcsine_series(sin1deg, tolerance);
  return sine_series(arc / 60, tolerance);
}

Real sin1_minute_seed(int precision) {
  check_precision(precision);
  const SineTable degrees = degree_table(std::min(precision + 5, kMaxPrecision));
  return sin1_minute_seed(degrees.at(60), precision);
}

std::vector<Real> sine_recurrence(const Real& seed, std::size_t count) {
  if (seed <= 0 || seed >= 1) throw SeedAccuracyError("seed must lie in (0, 1)");
  const Real twice_cos = 2 * boost::multiprecision::sqrt(1 - seed * seed);
  std::vector<Real> s(count + 1);
  s[0] = 0;
  if (count >= 1) s[1] = seed;
  for (std::size_t k = 1; k < count; ++k) s[k + 1] = twice_cos * s[k] - s[k - 1];
  return s;
}

SineTable minute_table(const Real& seed, int precision) {
  check_precision(precision);
  std::vector<Real> s = sine_recurrence(seed, 5400);
  const Real unit = pow10(-precision);
  if (abs(s[1800] - Real(1) / 2) > unit / 2 || abs(s[5400] - 1) > unit) {
    throw SeedAccuracyError(
        "seed does not reproduce sin 30deg and sin 90deg to the requested "
        "precision");
  }
  s[5400] = 1;
  std::vector<SineEntry> entries;
  entries.reserve(5400);
  for (int k = 1; k <= 5400; ++k) {
    entries.push_back({k, std::move(s[static_cast<std::size_t>(k)])});
  }
  return SineTable(1, std::move(entries), precision, Provenance::recurrence, unit);
}

SineTable reference_table(int step, int precision) {
  check_step(step);
  check_precision(precision);
  std::vector<SineEntry> entries;
  for (int angle = step; angle <= 5400; angle += step) {
    entries.push_back(
        {angle, kunstweg::reference_sine(angle, precision + kGuardDigits, kMaxPrecision)});
  }
  return SineTable(step, std::move(entries), precision, Provenance::reference,
                   pow10(-precision - kGuardDigits));
}

ErrorStats table_error_report(const SineTable& table, int precision) {
  check_precision(precision);
  if (table.size() == 0) throw InvalidStateError("empty table");
  ErrorStats stats{Real(0), 0, Real(0)};
  Real sum_squares = 0;
  for (const auto& entry : table.entries()) {
    const Real error = abs(entry.value - kunstweg::reference_sine(
                                             entry.angle, precision + kGuardDigits,
                                             kMaxPrecision));
    if (error > stats.max_abs_error) {
      stats.max_abs_error = error;
      stats.angle_of_max = entry.angle;
    }
    sum_squares += error * error;
  }
  stats.rms = boost::multiprecision::sqrt(sum_squares / Real(table.size()));
  return stats;
}

}  // namespace buergi::tablegen
