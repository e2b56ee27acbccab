#pragma once

// The traditional geometric route to a sine table: chords of inscribed
// polygons, Ptolemy's sum/difference and half-arc rules, the inequality
// bracket for crd 1 deg, and the closed-form sines of multiples of 15 deg.
// Arcs are in arcminutes, radius R is arbitrary (1, 60, 150, 10^7, ...).

#include <map>
#include <utility>
#include <vector>

#include "buergi/numeric.hpp"
#include "buergi/sine_table.hpp"

namespace buergi::classical {

// Arc (arcminutes) -> chord for the sides of the triangle, square, pentagon,
// hexagon and decagon: 7200, 5400, 4320, 3600, 2160.
std::map<int, Real> polygon_chords(const Real& radius);

enum class ChordMode { sum, difference };

// crd(a + b) or crd(a - b) from crd a and crd b via the cyclic-quadrilateral
// theorem, using crd(180deg - x) = sqrt(4R^2 - crd^2 x). Throws DomainError
// when the combined arc leaves (0, 180deg] or an input chord is not in
// (0, 2R].
Real chord_combine(const Real& crd_a, const Real& crd_b, const Real& radius,
                   ChordMode mode);

// crd(a/2) = sqrt(2R^2 - R*sqrt(4R^2 - crd^2 a)).
Real chord_half(const Real& crd_a, const Real& radius);

struct ChordBracket {
  Real lower;  // 2/3 crd 1.5deg, rounded down
  Real upper;  // 4/3 crd 0.75deg, rounded up
};

// Bounds on crd 1deg from crd a / crd b < a / b (b < a < 90deg).
ChordBracket crd1_bracket(const Real& radius, int precision);

struct ChordTable {
  Real radius;
  int step = 30;
  // (arc, chord) for arc = step, 2*step, ..., 10800.
  std::vector<std::pair<int, Real>> entries;

  // Throws GridError off-grid.
  const Real& chord(int arc) const;
};

// Half-degree chord table. Multiples of 1.5deg come from the polygon chords
// and the sum rule; crd 1deg is the bracket midpoint and crd 0.5deg its half;
// the remaining arcs up to 90deg combine the two, and arcs past 90deg come
// from their supplements.
ChordTable chord_table(const Real& radius);

// (angle in arcminutes, sine) for 15, 30, ..., 90 degrees.
std::vector<std::pair<int, Real>> kardaga_sines(int precision);

// sin 45' and sin 90' from the half-arc chain (chords at R = 1).
Real classical_sin45_minutes();
Real classical_sin90_minutes();

// Buergi's approximation sin 1deg ~ sin 45' + sin 90' / 6.
Real buergi_sin1_approx(int precision);

// Sine table from the half-degree chord table: sin phi = crd(2 phi) / (2R).
// Throws ConfigurationError unless step divides 5400 and is a multiple of
// 15 arcminutes.
SineTable ptolemy_sine_table(const Real& radius, int step, int precision);

// Documented accuracy of ptolemy_sine_table, limited by the crd 1deg
// midpoint.
inline const Real kPtolemyErrorBudget = Real("5e-6");

}  // namespace buergi::classical
