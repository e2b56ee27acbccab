#pragma once

// Full sine tables: degrees straight from the Kunstweg (n = 90), minutes
// from a corrected sin 1' and the three-term recurrence
//   s_{k+1} = 2 cos(1') s_k - s_{k-1}.

#include <string_view>
#include <vector>

#include "buergi/numeric.hpp"
#include "buergi/sine_table.hpp"

namespace buergi::tablegen {

// Kunstweg with n = 5400 / step parts, iterated until `precision` decimal
// places are stable.
SineTable kunstweg_table(int step, int precision);
// Step 60' (n = 90).
SineTable degree_table(int precision);

// sin 1deg / 60, the starting approximation.
Real naive_sin1_minute(const Real& sin1deg);

// sin 1' from sin 1deg with two corrections: recover the arc
// a = asin(S) = S + S^3/6 + 3S^5/40 + ..., then restore the sine of a/60
// by sin x = x - x^3/6 + ... . Both series run to the working tolerance.
Real sin1_minute_seed(const Real& sin1deg, int precision);
// Same, taking sin 1deg from degree_table(precision + 5).
Real sin1_minute_seed(int precision);

// Buergi's printed sin 1' and the exact value quoted next to it.
inline constexpr std::string_view kBuergiPrintedSin1Minute = "0.00029088863";
inline constexpr std::string_view kQuotedExactSin1Minute = "0.00029088820";

// s_0 = 0, s_1 = seed, s_{k+1} = 2c s_k - s_{k-1} with c = sqrt(1 - seed^2),
// for k up to `count`. Step-agnostic; the caller fixes the angle grid.
std::vector<Real> sine_recurrence(const Real& seed, std::size_t count);

// 5400-entry table at 1' steps. Throws SeedAccuracyError when the seed is not
// good enough for `precision` places: the 30deg entry must reproduce 1/2
// within 0.5*10^-precision and the 90deg entry 1 within 10^-precision. The
// 90deg entry is then pinned to exactly 1.
SineTable minute_table(const Real& seed, int precision);

// Oracle table from reference_sine at precision + guard digits.
SineTable reference_table(int step, int precision);

struct ErrorStats {
  Real max_abs_error;
  int angle_of_max = 0;  // arcminutes
  Real rms;
};

// Compares every entry with reference_sine at precision + guard digits.
ErrorStats table_error_report(const SineTable& table, int precision);

}  // namespace buergi::tablegen
