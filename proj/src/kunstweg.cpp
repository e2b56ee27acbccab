#include "buergi/kunstweg.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace buergi::kunstweg {
namespace {

// Full working precision: well below any representable rounding step.
Real series_tolerance(int precision) {
  return pow10(-std::min(precision + 20, 105));
}

Real sine_of_right_angle_unrounded(const Rational& fraction, int precision) {
  const Real tolerance = series_tolerance(precision);
  if (2 * fraction <= 1) {
    return sine_series(to_real(fraction) * pi() / 2, tolerance);
  }
  // sin(x) = cos(pi/2 - x) keeps the series argument within [0, pi/4].
  return cosine_series(to_real(Rational(1) - fraction) * pi() / 2, tolerance);
}

std::vector<Real> real_ratios(const DyadicVector& state) {
  const Real bottom = to_real(state.bottom());
  std::vector<Real> out;
  out.reserve(state.size());
  for (const auto& x : state.numerators()) out.push_back(to_real(x) / bottom);
  return out;
}

Real max_abs_difference(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real worst = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, Real(boost::multiprecision::abs(a[j] - b[j])));
  }
  return worst;
}

int digits_from_residual(const Real& residual, int cap) {
  if (residual <= 0) return cap;
  const Real digits = boost::multiprecision::floor(-boost::multiprecision::log10(residual));
  return std::min(cap, digits.convert_to<int>());
}

}  // namespace

DyadicVector::DyadicVector(std::vector<Integer> numerators, unsigned scale_exp)
    : numerators_(std::move(numerators)), scale_exp_(scale_exp) {
  if (numerators_.empty()) {
    throw InvalidStateError("column needs at least one entry");
  }
  bool any_positive = false;
  for (const auto& x : numerators_) {
    if (x < 0) throw InvalidStateError("column entries must be non-negative");
    any_positive = any_positive || x > 0;
  }
  if (!any_positive) throw InvalidStateError("column is identically zero");
}

DyadicVector DyadicVector::linear_ramp(std::size_t n) {
  std::vector<Integer> values;
  values.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) values.emplace_back(j);
  return DyadicVector(std::move(values));
}

DyadicVector DyadicVector::buergi_seed() {
  return DyadicVector({2, 4, 6, 7, 8, 9, 10, 11, 12});
}

Rational DyadicVector::value(std::size_t index) const {
  return Rational(numerators_.at(index), Integer(1) << scale_exp_);
}

std::vector<Rational> DyadicVector::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(value(j));
  return out;
}

std::vector<Rational> AuxiliaryColumn::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (const auto& x : numerators) {
    out.emplace_back(x, Integer(1) << scale_exp);
  }
  return out;
}

StepResult kunstweg_step(const DyadicVector& state) {
  const std::size_t n = state.size();
  const bool odd_bottom = boost::multiprecision::bit_test(state.bottom(), 0);
  const unsigned shift = odd_bottom ? 1 : 0;

  AuxiliaryColumn aux;
  aux.scale_exp = state.scale_exp() + shift;
  aux.numerators.resize(n);
  aux.numerators[n - 1] = (state.bottom() << shift) >> 1;
  for (std::size_t j = n - 1; j-- > 0;) {
    aux.numerators[j] = (state.numerators()[j] << shift) + aux.numerators[j + 1];
  }

  std::vector<Integer> next(n);
  next[0] = aux.numerators[0];
  for (std::size_t j = 1; j < n; ++j) next[j] = next[j - 1] + aux.numerators[j];

  return {DyadicVector(std::move(next), aux.scale_exp), std::move(aux)};
}

IterationResult iterate(const DyadicVector& seed, const StopRule& stop,
                        const IterateOptions& options) {
  int report_digits = options.report_digits;
  std::optional<Real> threshold;
  int max_steps = options.iteration_limit;
  if (const auto* limit = std::get_if<MaxIterations>(&stop)) {
    if (limit->count <= 0) {
      throw ConfigurationError("iteration count must be positive");
    }
    max_steps = limit->count;
  } else {
    const int digits = std::get<TargetDigits>(stop).digits;
    if (digits <= 0) throw ConfigurationError("target digits must be positive");
    check_precision(digits, options.precision_ceiling);
    report_digits = std::min(digits + kGuardDigits, kMaxPrecision);
    threshold = pow10(-(digits + 1));
  }
  check_precision(report_digits, kMaxPrecision);

  const std::size_t n = seed.size();
  const std::vector<Real> reference = reference_sine_vector(n, report_digits, kMaxPrecision);

  IterationResult result{seed, {}, {}, {}};
  ConvergenceReport& report = result.report;
  report.closed_form_eigenvalue = perron_eigenvalue(n, report_digits, kMaxPrecision);
  if (options.keep_history) result.columns.push_back(seed);

  std::vector<Real> previous = real_ratios(seed);
  for (int k = 0; k < max_steps; ++k) {
    StepResult step = kunstweg_step(result.state);

    const int exponent_gap = static_cast<int>(step.next.scale_exp()) -
                             static_cast<int>(result.state.scale_exp());
    report.eigenvalue_estimates.push_back(
        to_real(step.next.bottom()) / to_real(result.state.bottom()) /
        to_real(Integer(1) << exponent_gap));

    std::vector<Real> current = real_ratios(step.next);
    const Real change = max_abs_difference(current, previous);
    const Real residual = max_abs_difference(current, reference);
    report.normalized_changes.push_back(change);
    report.residuals.push_back(residual);
    report.digits_history.push_back(digits_from_residual(residual, report_digits));
    ++report.iterations;

    if (options.keep_history) {
      result.columns.push_back(step.next);
      result.auxiliaries.push_back(step.auxiliary);
    }
    result.state = std::move(step.next);
    previous = std::move(current);

    if (threshold && change < *threshold) break;
    if (threshold && k + 1 == max_steps) {
      throw InvalidStateError("no convergence within the iteration limit");
    }
  }
  report.normalized_residual = report.residuals.back();
  report.digits_correct = report.digits_history.back();
  return result;
}

std::vector<Real> normalize(const DyadicVector& state, int precision,
                            int precision_ceiling) {
  check_precision(precision, precision_ceiling);
  if (state.bottom() == 0) {
    throw InvalidStateError("cannot normalize by a zero bottom entry");
  }
  std::vector<Real> out;
  out.reserve(state.size());
  const Real unit = pow10(precision);
  for (const auto& x : state.numerators()) {
    out.push_back(to_real(round_rational_to_places(Rational(x, state.bottom()),
                                                   precision)) /
                  unit);
  }
  return out;
}

std::vector<std::string> normalize_fixed(const DyadicVector& state, int precision) {
  std::vector<std::string> out;
  for (const Real& x : normalize(state, precision, kMaxPrecision)) {
    out.push_back(to_fixed(x, precision));
  }
  return out;
}

Real perron_eigenvalue(std::size_t n, int precision, int precision_ceiling) {
  check_precision(precision, precision_ceiling);
  if (n == 0) throw ConfigurationError("part count must be at least 1");
  const Real s = sine_of_right_angle_unrounded(
      Rational(1, 2 * static_cast<long>(n)), precision);
  return round_to_places(Real(1) / (4 * s * s), precision);
}

Real reference_sine_of_right_angle(const Rational& fraction, int precision,
                                   int precision_ceiling) {
  check_precision(precision, precision_ceiling);
  if (fraction < 0 || fraction > 1) {
    throw DomainError("angle outside [0, 90] degrees");
  }
  return round_to_places(sine_of_right_angle_unrounded(fraction, precision),
                         precision);
}

Real reference_sine(int arcminutes, int precision, int precision_ceiling) {
  if (arcminutes < 0 || arcminutes > 5400) {
    throw DomainError("angle outside [0, 5400] arcminutes");
  }
  return reference_sine_of_right_angle(Rational(arcminutes, 5400), precision,
                                       precision_ceiling);
}

std::vector<Real> reference_sine_vector(std::size_t n, int precision,
                                        int precision_ceiling) {
  std::vector<Real> out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    out.push_back(reference_sine_of_right_angle(
        Rational(static_cast<long>(j), static_cast<long>(n)), precision,
        precision_ceiling));
  }
  return out;
}

}  // namespace buergi::kunstweg
