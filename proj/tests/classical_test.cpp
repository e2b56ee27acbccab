#include "buergi/classical.hpp"

#include <gtest/gtest.h>

#include "buergi/kunstweg.hpp"

namespace buergi::classical {
namespace {

using boost::multiprecision::abs;

// Independent chord oracle: crd x = 2R sin(x/2).
Real true_chord(int arcminutes, const Real& radius) {
  return 2 * radius * boost::multiprecision::sin(Real(arcminutes) * pi() / 21600);
}

const Real kTight("1e-28");

TEST(PolygonChords, AtRadiusSixty) {
  const auto chords = polygon_chords(Real(60));
  EXPECT_EQ(to_fixed(chords.at(5400), 10), "84.8528137424");
  EXPECT_EQ(to_fixed(chords.at(2160), 10), "37.0820393250");
  EXPECT_EQ(to_fixed(chords.at(7200), 10), "103.9230484541");
  EXPECT_EQ(chords.at(3600), Real(60));
  EXPECT_EQ(chords.size(), 5u);
}

TEST(PolygonChords, MatchOracleForSeveralRadii) {
  for (const Real radius : {Real(1), Real(60), Real(150), Real(10000000)}) {
    for (const auto& [arc, chord] : polygon_chords(radius)) {
      EXPECT_LT(abs(chord - true_chord(arc, radius)), kTight * radius) << arc;
    }
  }
}

TEST(ChordCombine, DifferenceGivesTwelveDegrees) {
  const auto chords = polygon_chords(Real(60));
  const Real crd12 = chord_combine(chords.at(4320), chords.at(3600), Real(60), ChordMode::difference);
  EXPECT_EQ(to_fixed(crd12, 10), "12.5434155921");
}

TEST(ChordCombine, SumAndDomain) {
  const Real r(60);
  const auto chords = polygon_chords(r);
  const Real crd96 = chord_combine(chords.at(3600), chords.at(2160), r, ChordMode::sum);
  EXPECT_LT(abs(crd96 - true_chord(5760, r)), kTight * r);
  const Real crd180 = chord_combine(chords.at(5400), chords.at(5400), r, ChordMode::sum);
  EXPECT_LT(abs(crd180 - 2 * r), kTight * r);
  EXPECT_THROW(chord_combine(chords.at(7200), chords.at(7200), r, ChordMode::sum), DomainError);
  EXPECT_THROW(chord_combine(chords.at(3600), chords.at(3600), r, ChordMode::difference),
               DomainError);
  EXPECT_THROW(chord_combine(Real(121), chords.at(3600), r, ChordMode::sum), DomainError);
  EXPECT_THROW(chord_combine(Real(0), chords.at(3600), r, ChordMode::sum), DomainError);
}

TEST(ChordHalf, OneAndAHalfDegrees) {
  const Real r(60);
  const auto chords = polygon_chords(r);
  const Real crd12 = chord_combine(chords.at(4320), chords.at(3600), r, ChordMode::difference);
  const Real crd1_5 = chord_half(chord_half(chord_half(crd12, r), r), r);
  EXPECT_EQ(to_fixed(crd1_5, 7), "1.5707515");
  EXPECT_LT(abs(crd1_5 - true_chord(90, r)), kTight * r);
}

TEST(Crd1Bracket, ValuesAndTrueChordInside) {
  const auto bracket = crd1_bracket(Real(60), 7);
  EXPECT_EQ(to_fixed(bracket.lower, 7), "1.0471676");
  EXPECT_EQ(to_fixed(bracket.upper, 7), "1.0471901");
  const Real truth = true_chord(60, Real(60));
  EXPECT_EQ(to_fixed(truth, 10), "1.0471842598");
  EXPECT_LT(bracket.lower, truth);
  EXPECT_GT(bracket.upper, truth);
}

TEST(ChordTable, HalfDegreeGrid) {
  const Real r(60);
  const auto table = chord_table(r);
  EXPECT_EQ(table.entries.size(), 360u);
  EXPECT_EQ(table.entries.front().first, 30);
  EXPECT_EQ(table.entries.back().first, 10800);
  EXPECT_LT(abs(table.chord(10800) - 2 * r), kTight * r);
  EXPECT_LT(abs(table.chord(90) - true_chord(90, r)), kTight * r);
  EXPECT_THROW(table.chord(45), GridError);
  EXPECT_THROW(table.chord(10830), GridError);
  // Entries away from the 1.5deg lattice inherit the bracket midpoint error.
  for (const auto& [arc, chord] : table.entries) {
    EXPECT_LT(abs(chord - true_chord(arc, r)), Real("1e-4") * r / 60) << arc;
  }
}

TEST(KardagaSines, FifteenDegreeMultiples) {
  const auto sines = kardaga_sines(10);
  ASSERT_EQ(sines.size(), 6u);
  EXPECT_EQ(sines[0].first, 900);
  EXPECT_EQ(to_fixed(sines[0].second, 10), "0.2588190451");
  EXPECT_EQ(to_fixed(sines[1].second, 10), "0.5000000000");
  EXPECT_EQ(to_fixed(sines[5].second, 10), "1.0000000000");
  for (const auto& [angle, value] : kardaga_sines(40)) {
    EXPECT_LT(abs(value - kunstweg::reference_sine(angle, 40)), Real("1e-40")) << angle;
  }
}

TEST(BuergiApproximation, SineOfOneDegree) {
  const Real approx = buergi_sin1_approx(11);
  EXPECT_EQ(to_fixed(approx, 11), "0.01745242029");
  const Real error = approx - kunstweg::reference_sine(60, 30);
  EXPECT_GT(error, Real("1.38e-8"));
  EXPECT_LT(error, Real("1.39e-8"));
  EXPECT_EQ(to_fixed(classical_sin90_minutes() / 6, 11), "0.00436282472");
}

TEST(BuergiApproximation, SinFortyFiveMinutesFromHalfArcs) {
  EXPECT_LT(abs(classical_sin45_minutes() - kunstweg::reference_sine(45, 40)), Real("1e-30"));
  EXPECT_LT(abs(classical_sin90_minutes() - kunstweg::reference_sine(90, 40)), Real("1e-30"));
}

TEST(PtolemyTable, HalfDegreeStep) {
  const auto table = ptolemy_sine_table(Real(60), 30, 7);
  EXPECT_EQ(table.size(), 180u);
  EXPECT_EQ(table.provenance(), Provenance::ptolemy);
  EXPECT_EQ(table.at(5400), Real(1));
  Real worst = 0;
  for (const auto& entry : table.entries()) {
    worst = std::max(worst, Real(abs(entry.value - kunstweg::reference_sine(entry.angle, 20))));
  }
  EXPECT_LT(worst, kPtolemyErrorBudget);
  EXPECT_EQ(table.error_budget(), kPtolemyErrorBudget);
}

TEST(PtolemyTable, StepValidation) {
  EXPECT_THROW(ptolemy_sine_table(Real(60), 7, 7), ConfigurationError);
  EXPECT_THROW(ptolemy_sine_table(Real(60), 20, 7), ConfigurationError);
  EXPECT_THROW(ptolemy_sine_table(Real(60), 0, 7), ConfigurationError);
  EXPECT_NO_THROW(ptolemy_sine_table(Real(60), 15, 7));
  EXPECT_NO_THROW(ptolemy_sine_table(Real(60), 60, 7));
}

TEST(PtolemyTable, RadiusDoesNotChangeTheSines) {
  const auto a = ptolemy_sine_table(Real(60), 60, 7);
  const auto b = ptolemy_sine_table(Real(10000000), 60, 7);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LT(abs(a.entries()[i].value - b.entries()[i].value), Real("1e-25"));
  }
}

// Properties over several radii.

class ChordProperty : public ::testing::TestWithParam<const char*> {
 protected:
  Real radius() const { return Real(GetParam()); }
};

TEST_P(ChordProperty, TableIsIncreasing) {
  const auto table = chord_table(radius());
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    EXPECT_GT(table.entries[i].second, table.entries[i - 1].second) << table.entries[i].first;
  }
}

TEST_P(ChordProperty, SupplementCompletesTheDiameter) {
  const Real r = radius();
  const auto table = chord_table(r);
  for (const auto& [arc, chord] : table.entries) {
    if (arc >= 10800) continue;
    const Real& other = table.chord(10800 - arc);
    EXPECT_LT(abs(chord * chord + other * other - 4 * r * r), Real("1e-25") * r * r) << arc;
  }
}

TEST_P(ChordProperty, HalvingInvertsDoubling) {
  const Real r = radius();
  for (int arc = 60; arc <= 10800; arc += 420) {
    const Real chord = true_chord(arc, r);
    const Real half = chord_half(chord, r);
    EXPECT_LT(abs(half - true_chord(arc / 2, r)), kTight * r) << arc;
    if (arc / 2 <= 5400) {
      const Real doubled = chord_combine(half, half, r, ChordMode::sum);
      EXPECT_LT(abs(doubled - chord), kTight * r) << arc;
    }
  }
}

TEST_P(ChordProperty, RatioBoundBracketsEveryPair) {
  // crd a / crd b < a / b for b < a <= 180deg.
  const Real r = radius();
  for (int a = 60; a <= 10800; a += 300) {
    for (int b = 30; b < a; b += 270) {
      EXPECT_LT(true_chord(a, r) / true_chord(b, r), Real(a) / b) << a << " " << b;
    }
  }
  const auto bracket = crd1_bracket(r, 12);
  const Real truth = true_chord(60, r);
  EXPECT_LE(bracket.lower, truth);
  EXPECT_GE(bracket.upper, truth);
}

INSTANTIATE_TEST_SUITE_P(Radii, ChordProperty, ::testing::Values("1", "60", "10000000"));

}  // namespace
}  // namespace buergi::classical
