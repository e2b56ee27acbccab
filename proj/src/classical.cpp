#include "buergi/classical.hpp"

#include <string>

#include "buergi/errors.hpp"

namespace buergi::classical {
namespace {

using boost::multiprecision::sqrt;

// Rounding slack when an exact boundary (arc 0 or 180deg) is hit.
Real slack(const Real& radius) { return radius * pow10(-90); }

void check_radius(const Real& radius) {
  if (radius <= 0) throw DomainError("radius must be positive");
}

void check_chord(const Real& chord, const Real& radius) {
  if (chord <= 0 || chord > 2 * radius + slack(radius)) {
    throw DomainError("chord outside (0, 2R]");
  }
}

// crd(180deg - a).
Real supplement(const Real& chord, const Real& radius) {
  const Real rest = 4 * radius * radius - chord * chord;
  return rest > 0 ? sqrt(rest) : Real(0);
}

struct HalfArcChain {
  Real crd12, crd6, crd3, crd1_5, crd0_75;
};

HalfArcChain half_arc_chain(const Real& radius) {
  const auto polygons = polygon_chords(radius);
  HalfArcChain chain;
  chain.crd12 = chord_combine(polygons.at(4320), polygons.at(3600), radius,
                              ChordMode::difference);
  chain.crd6 = chord_half(chain.crd12, radius);
  chain.crd3 = chord_half(chain.crd6, radius);
  chain.crd1_5 = chord_half(chain.crd3, radius);
  chain.crd0_75 = chord_half(chain.crd1_5, radius);
  return chain;
}

}  // namespace

std::map<int, Real> polygon_chords(const Real& radius) {
  check_radius(radius);
  const Real root5 = sqrt(Real(5));
  return {
      {2160, radius * (root5 - 1) / 2},
      {3600, radius},
      {4320, radius * sqrt(10 - 2 * root5) / 2},
      {5400, radius * sqrt(Real(2))},
      {7200, radius * sqrt(Real(3))},
  };
}

Real chord_combine(const Real& crd_a, const Real& crd_b, const Real& radius,
                   ChordMode mode) {
  check_radius(radius);
  check_chord(crd_a, radius);
  check_chord(crd_b, radius);
  const Real sup_a = supplement(crd_a, radius);
  const Real sup_b = supplement(crd_b, radius);
  const Real diameter = 2 * radius;
  if (mode == ChordMode::difference) {
    const Real result = (crd_a * sup_b - crd_b * sup_a) / diameter;
    if (result <= slack(radius)) {
      throw DomainError("difference arc is not positive");
    }
    return result;
  }
  // crd(180deg - (a + b)); negative once a + b passes 180deg.
  const Real complement = (sup_a * sup_b - crd_a * crd_b) / diameter;
  if (complement < -slack(radius)) {
    throw DomainError("sum arc exceeds 180 degrees");
  }
  return supplement(complement > 0 ? complement : Real(0), radius);
}

Real chord_half(const Real& crd_a, const Real& radius) {
  check_radius(radius);
  check_chord(crd_a, radius);
  const Real r2 = radius * radius;
  return sqrt(2 * r2 - radius * supplement(crd_a, radius));
}

ChordBracket crd1_bracket(const Real& radius, int precision) {
  check_radius(radius);
  check_precision(precision);
  const HalfArcChain chain = half_arc_chain(radius);
  return {floor_to_places(chain.crd1_5 * 2 / 3, precision),
          ceil_to_places(chain.crd0_75 * 4 / 3, precision)};
}

const Real& ChordTable::chord(int arc) const {
  if (arc <= 0 || arc > 10800 || arc % step != 0) {
    throw GridError("arc " + std::to_string(arc) + "' not in chord table");
  }
  return entries[static_cast<std::size_t>(arc / step - 1)].second;
}

ChordTable chord_table(const Real& radius) {
  check_radius(radius);
  const auto polygons = polygon_chords(radius);
  const HalfArcChain chain = half_arc_chain(radius);

  // Multiples of 1.5deg up to the quadrant.
  std::map<int, Real> coarse;
  coarse[90] = chain.crd1_5;
  coarse[10800] = 2 * radius;
  for (int arc = 180; arc <= 5400; arc += 90) {
    if (auto it = polygons.find(arc); it != polygons.end()) {
      coarse[arc] = it->second;
    } else {
      coarse[arc] = chord_combine(coarse.at(arc - 90), chain.crd1_5, radius,
                                  ChordMode::sum);
    }
  }

  // crd 1deg: midpoint of the inequality bracket.
  const Real crd1 = (chain.crd1_5 * 2 / 3 + chain.crd0_75 * 4 / 3) / 2;
  const Real crd_half_degree = chord_half(crd1, radius);

  ChordTable table{radius, 30, {}};
  table.entries.reserve(360);
  for (int arc = 30; arc <= 10800; arc += 30) {
    const int rest = arc % 90;
    const int base = arc - rest;
    Real chord;
    if (arc > 5400 && arc < 10800) {
      // Beyond the quadrant, from the supplement already in the table.
      const Real& other = table.entries[static_cast<std::size_t>((10800 - arc) / 30 - 1)].second;
      chord = sqrt(4 * radius * radius - other * other);
    } else if (rest == 0) {
      chord = coarse.at(arc);
    } else {
      const Real& piece = rest == 30 ? crd_half_degree : crd1;
      chord = base == 0 ? piece
                        : chord_combine(coarse.at(base), piece, radius,
                                        ChordMode::sum);
    }
    table.entries.emplace_back(arc, std::move(chord));
  }
  return table;
}

std::vector<std::pair<int, Real>> kardaga_sines(int precision) {
  check_precision(precision);
  const Real half = Real(1) / 2;
  const Real sin60 = sqrt(Real(3)) / 2;
  const Real sin15 = sqrt((1 - sin60) / 2);
  const Real sin75 = sqrt((1 + sin60) / 2);
  const Real sin45 = sqrt(Real(2)) / 2;
  std::vector<std::pair<int, Real>> out = {
      {900, sin15}, {1800, half}, {2700, sin45},
      {3600, sin60}, {4500, sin75}, {5400, Real(1)},
  };
  for (auto& [angle, value] : out) value = round_to_places(value, precision);
  return out;
}

Real classical_sin45_minutes() { return half_arc_chain(Real(1)).crd1_5 / 2; }

Real classical_sin90_minutes() { return half_arc_chain(Real(1)).crd3 / 2; }

Real buergi_sin1_approx(int precision) {
  check_precision(precision);
  const HalfArcChain chain = half_arc_chain(Real(1));
  return round_to_places(chain.crd1_5 / 2 + chain.crd3 / 12, precision);
}

SineTable ptolemy_sine_table(const Real& radius, int step, int precision) {
  check_precision(precision);
  if (step <= 0 || 5400 % step != 0) {
    throw ConfigurationError("table step must divide 5400 arcminutes");
  }
  if (step % 15 != 0) {
    throw ConfigurationError(
        "chord-derived tables need a step that is a multiple of 15'");
  }
  const ChordTable chords = chord_table(radius);
  const Real right_angle = chords.chord(10800) / (2 * radius);
  std::vector<SineEntry> entries;
  for (int angle = step; angle <= 5400; angle += step) {
    entries.push_back(
        {angle, angle == 5400 ? Real(1)
                              : chords.chord(2 * angle) / (2 * radius) / right_angle});
  }
  return SineTable(step, std::move(entries), precision, Provenance::ptolemy,
                   kPtolemyErrorBudget);
}

}  // namespace buergi::classical
