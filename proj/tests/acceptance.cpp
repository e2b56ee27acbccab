// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "buergi/classical.hpp"
#include "buergi/cli.hpp"
#include "buergi/kunstweg.hpp"
#include "buergi/prosthaphaeresis.hpp"
#include "buergi/tablegen.hpp"

namespace {

using namespace buergi;
using boost::multiprecision::abs;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string sci(const Real& x) { return to_scientific(x); }

Real oracle_sine(int arcminutes) {
  return boost::multiprecision::sin(Real(arcminutes) * pi() / 10800);
}

Real max_error_vs_oracle(const std::vector<Real>& values, std::size_t n) {
  Real worst = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const Real truth = boost::multiprecision::sin(Real(static_cast<long>(j)) * pi() /
                                                  (2 * Real(static_cast<long>(n))));
    worst = std::max(worst, Real(abs(values[j - 1] - truth)));
  }
  return worst;
}

void fig4_exact(Check& c) {
  const auto& golden = cli::fig4_golden();
  const auto start = Clock::now();
  kunstweg::DyadicVector state = kunstweg::DyadicVector::buergi_seed();
  std::vector<kunstweg::StepResult> steps;
  for (int k = 0; k < 4; ++k) {
    steps.push_back(kunstweg::kunstweg_step(state));
    state = steps.back().next;
  }
  const double ms = millis_since(start);
  int matched = 0;
  int total = 0;
  auto compare = [&](const std::vector<Integer>& got, const std::vector<long>& want,
                     std::size_t offset) {
    for (std::size_t i = 0; i < want.size(); ++i) {
      ++total;
      if (i < offset ? want[i] == 0 : got[i - offset] == want[i]) ++matched;
    }
  };
  compare(kunstweg::DyadicVector::buergi_seed().numerators(), golden.columns[0], 1);
  for (int k = 0; k < 4; ++k) {
    c.require(steps[k].next.scale_exp() == 0 && steps[k].auxiliary.scale_exp == 0,
              "integer columns");
    compare(steps[k].auxiliary.numerators, golden.auxiliaries[k], 0);
    compare(steps[k].next.numerators(), golden.columns[k + 1], 1);
  }
  c.require(matched == total, "every value");
  c.require(ms < 10, "runtime < 10 ms");
  c.detail << matched << "/" << total << " values, " << ms << " ms";
}

void column5_ratios(Check& c) {
  const kunstweg::DyadicVector col5(std::vector<Integer>{
      2235060, 4402208, 6435596, 8273441, 9859902, 11146776, 12094962, 12675649, 12871192});
  const auto eight = kunstweg::normalize_fixed(col5, 8);
  const auto nine = kunstweg::normalize_fixed(col5, 9);
  c.require(eight[0] == "0.17364825", "j=1");
  c.require(nine[7] == "0.984807701", "j=8");
  c.detail << eight[0] << ", " << nine[7];
}

void column8_accuracy(Check& c) {
  const auto start = Clock::now();
  const auto run = kunstweg::iterate(kunstweg::DyadicVector::buergi_seed(),
                                     kunstweg::MaxIterations{7});
  const auto values = kunstweg::normalize(run.state, 30);
  const double ms = millis_since(start);
  const Real err = max_error_vs_oracle(values, 9);
  c.require(err < Real("1e-9"), "max error < 1e-9");
  c.require(ms < 100, "runtime < 100 ms");
  c.detail << "max error " << sci(err) << ", " << ms << " ms";
}

void eigenvalue_law(Check& c) {
  for (std::size_t n : {1u, 2u, 9u, 30u, 90u}) {
    const auto start = Clock::now();
    const auto run = kunstweg::iterate(kunstweg::DyadicVector::linear_ramp(n),
                                       kunstweg::MaxIterations{12});
    const double ms = millis_since(start);
    // Oracle closed form, independent of the library.
    const Real s = boost::multiprecision::sin(pi() / (4 * Real(static_cast<long>(n))));
    const Real mu = 1 / (4 * s * s);
    const Real rel = abs(run.report.eigenvalue_estimates.back() / mu - 1);
    c.require(rel < Real("1e-6"), "n=" + std::to_string(n));
    c.require(ms < 2000, "runtime n=" + std::to_string(n));
    c.detail << "n=" << n << ": " << sci(rel) << " ";
  }
}

void eigenvector_equation(Check& c) {
  const int p = 30;
  for (std::size_t n : {2u, 9u, 90u}) {
    const auto v = kunstweg::reference_sine_vector(n, p);
    const Real mu = kunstweg::perron_eigenvalue(n, p);
    const auto mv = kunstweg::apply_matrix_dense<Real>(v, n);
    Real worst = 0;
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, Real(abs(mv[j] - mu * v[j])));
    c.require(worst < Real("1e-20"), "n=" + std::to_string(n));
    c.detail << "n=" << n << ": " << sci(worst) << " ";
  }
}

void matrix_consistency(Check& c) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> size(1, 32);
  std::uniform_int_distribution<long> num(0, 100000);
  std::uniform_int_distribution<long> signed_num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 999);
  int step_ok = 0;
  int inverse_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    std::vector<Integer> values(n);
    for (auto& v : values) v = num(rng);
    values.back() += 1;
    const kunstweg::DyadicVector state(values, static_cast<unsigned>(trial % 4));
    step_ok += kunstweg::kunstweg_step(state).next.to_rationals() ==
               kunstweg::apply_matrix_dense<Rational>(state.to_rationals(), n);

    std::vector<Rational> x(n);
    for (auto& r : x) r = Rational(signed_num(rng), den(rng));
    inverse_ok += kunstweg::second_difference_inverse<Rational>(
                      kunstweg::apply_matrix_dense<Rational>(x, n), n) == x;
  }
  c.require(step_ok == 200, "step == dense");
  c.require(inverse_ok == 200, "inverse");
  c.detail << "step " << step_ok << "/200, inverse " << inverse_ok << "/200";
}

void telescoping(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 16);
  std::uniform_int_distribution<long> num(-10000, 10000);
  std::uniform_int_distribution<long> den(1, 999);
  int ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    std::vector<Rational> a(n + 1, Rational(0));
    for (std::size_t i = 1; i <= n; ++i) a[i] = Rational(num(rng), den(rng));
    bool all = true;
    for (std::size_t j = 1; j <= n; ++j) {
      Rational lhs3 = 0;
      for (std::size_t l = 1; l < j; ++l) {
        lhs3 += Rational(static_cast<long>(l)) * a[l] -
                Rational(static_cast<long>(l), 2) * (a[l - 1] + a[l + 1]);
      }
      const Rational rhs3 = (Rational(static_cast<long>(j)) * a[j - 1] -
                             Rational(static_cast<long>(j) - 1) * a[j]) / 2;
      Rational lhs4 = 0;
      for (std::size_t l = j; l < n; ++l) lhs4 += a[l] - (a[l - 1] + a[l + 1]) / 2;
      const Rational rhs4 = (a[n - 1] - a[n] + a[j] - a[j - 1]) / 2;
      all = all && lhs3 == rhs3 && lhs4 == rhs4;
    }
    ok += all;
  }
  c.require(ok == 200, "all sequences");
  c.detail << ok << "/200 sequences";
}

void minute_table(Check& c) {
  const auto start = Clock::now();
  const auto table = tablegen::minute_table(tablegen::sin1_minute_seed(12), 12);
  const double ms = millis_since(start);
  Real worst = 0;
  bool decreasing = true;
  Real previous = 2;
  Real last = 0;
  for (const auto& entry : table.entries()) {
    worst = std::max(worst, Real(abs(entry.value - oracle_sine(entry.angle))));
    const Real diff = entry.value - last;
    decreasing = decreasing && diff < previous;
    previous = diff;
    last = entry.value;
  }
  c.require(table.size() == 5400, "5400 entries");
  c.require(worst < Real("1e-12"), "max error < 1e-12");
  c.require(table.at(5400) == 1, "90deg == 1");
  c.require(decreasing, "first differences decreasing");
  c.require(ms < 2000, "runtime < 2 s");
  c.detail << table.size() << " entries, max error " << sci(worst) << ", " << ms << " ms";
}

void sin1_seed(Check& c) {
  const Real truth = oracle_sine(1);
  const Real seed = tablegen::sin1_minute_seed(12);
  const Real seed_err = abs(seed - truth);
  const Real naive_err = abs(tablegen::naive_sin1_minute(oracle_sine(60)) - truth);
  const Real pair = Real(std::string(tablegen::kBuergiPrintedSin1Minute)) -
                    Real(std::string(tablegen::kQuotedExactSin1Minute));
  c.require(seed_err < Real("1e-12"), "seed");
  c.require(naive_err > Real("1.4e-8") && naive_err < Real("1.6e-8"), "naive ~1.5e-8");
  c.require(abs(pair - Real("4.3e-10")) < Real("1e-12"), "printed pair ~4.3e-10");
  c.detail << "seed " << sci(seed_err) << ", naive " << sci(naive_err) << ", pair "
           << sci(pair);
}

void buergi_sin1(Check& c) {
  const Real approx = classical::classical_sin45_minutes() + classical::classical_sin90_minutes() / 6;
  const Real err = abs(approx - oracle_sine(60));
  c.require(err < Real("2e-8"), "< 2e-8");
  c.detail << "error " << sci(err);
}

void ptolemy(Check& c) {
  const auto table = classical::ptolemy_sine_table(Real(60), 30, 7);
  Real worst = 0;
  for (const auto& entry : table.entries()) {
    worst = std::max(worst, Real(abs(entry.value - oracle_sine(entry.angle))));
  }
  const auto bracket = classical::crd1_bracket(Real(60), 7);
  const Real truth = 120 * oracle_sine(30);
  c.require(worst < Real("5e-6"), "max error < 5e-6");
  c.require(bracket.lower < truth && truth < bracket.upper, "bracket");
  c.detail << "max error " << sci(worst) << ", crd 1deg in [" << to_fixed(bracket.lower, 7)
           << ", " << to_fixed(bracket.upper, 7) << "]";
}

void prosthaphaeresis_identity(Check& c) {
  const auto table = tablegen::minute_table(tablegen::sin1_minute_seed(12), 12);
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> angle(1, 5400);
  Real worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int a = angle(rng);
    const int b = angle(rng);
    const auto result = prosthaphaeresis::prost_multiply(a, b, table);
    worst = std::max(worst, Real(abs(result.product_estimate - oracle_sine(a) * oracle_sine(b))));
  }
  c.require(worst < Real("1e-11"), "< 1e-11");
  c.detail << "500 pairs, max error " << sci(worst);
}

void degree_table(Check& c) {
  const auto table = tablegen::degree_table(9);
  Real worst = 0;
  Real complement = 0;
  for (const auto& entry : table.entries()) {
    worst = std::max(worst, Real(abs(entry.value - oracle_sine(entry.angle))));
    if (entry.angle < 5400) {
      const Real other = table.at(5400 - entry.angle);
      complement = std::max(complement, Real(abs(entry.value * entry.value + other * other - 1)));
    }
  }
  c.require(worst < Real("1e-9"), "max error < 1e-9");
  c.require(complement < Real("4e-9"), "complement < 4e-9");
  c.detail << "max error " << sci(worst) << ", complement " << sci(complement);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"worked example reproduced exactly", fig4_exact},
      {"column 5 ratios", column5_ratios},
      {"column 8 accuracy", column8_accuracy},
      {"eigenvalue law", eigenvalue_law},
      {"eigenvector equation", eigenvector_equation},
      {"matrix consistency", matrix_consistency},
      {"telescoping identities", telescoping},
      {"minute table", minute_table},
      {"sin 1' seed", sin1_seed},
      {"sin 1deg approximation", buergi_sin1},
      {"chord table", ptolemy},
      {"prosthaphaeresis identity", prosthaphaeresis_identity},
      {"degree table", degree_table},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    Check check;
    try {
      body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << " [exception: " << e.what() << "]";
    }
    failures += !check.ok;
    std::printf("%s %2d %s: %s\n", check.ok ? "PASS" : "FAIL", ++index, name,
                check.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
