#pragma once

// Buergi's "Kunstweg": repeated additions and halvings over a column of
// numbers whose normalized entries converge to sin(j*90deg/n), j = 1..n.
//
// One step maps (a_1..a_n) to (a'_1..a'_n):
//   b_n = a_n / 2,        b_j = a_j + b_{j+1}   (bottom to top)
//   a'_1 = b_1,           a'_j = a'_{j-1} + b_j (top to bottom)
// which is left-multiplication by the positive matrix M with rows
//   (1, 2, ..., j-1, j, ..., j, j/2).
// The normalized fixed point is the Perron eigenvector of M, with
// eigenvalue csc^2(pi/4n)/4.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "buergi/errors.hpp"
#include "buergi/numeric.hpp"

namespace buergi::kunstweg {

// Exact column state: entry j (1-based) is numerators[j-1] / 2^scale_exp.
// a_0 = 0 is implicit.
class DyadicVector {
 public:
  // Throws InvalidStateError if empty, if any numerator is negative, or if
  // all numerators are zero.
  explicit DyadicVector(std::vector<Integer> numerators, unsigned scale_exp = 0);

  // a_j = j, the default seed for arbitrary n.
  static DyadicVector linear_ramp(std::size_t n);
  // Column 1 of Buergi's worked example: 2, 4, 6, 7, 8, 9, 10, 11, 12.
  static DyadicVector buergi_seed();

  std::size_t size() const { return numerators_.size(); }
  const std::vector<Integer>& numerators() const { return numerators_; }
  unsigned scale_exp() const { return scale_exp_; }
  const Integer& bottom() const { return numerators_.back(); }

  Rational value(std::size_t index) const;  // 0-based
  std::vector<Rational> to_rationals() const;

  friend bool operator==(const DyadicVector&, const DyadicVector&) = default;

 private:
  std::vector<Integer> numerators_;
  unsigned scale_exp_;
};

// The intermediate column b_1..b_n of one step, same dyadic scale as the
// step's output. Read bottom to top, its entries track the sines of the
// midpoint angles (2i-1)*90deg/(2n).
struct AuxiliaryColumn {
  std::vector<Integer> numerators;
  unsigned scale_exp = 0;

  std::size_t size() const { return numerators.size(); }
  std::vector<Rational> to_rationals() const;
};

struct StepResult {
  DyadicVector next;
  AuxiliaryColumn auxiliary;
};

// One application of M. When a_n is odd the whole column is doubled first
// (scale_exp + 1) so that the halving stays exact.
StepResult kunstweg_step(const DyadicVector& state);

struct MaxIterations {
  int count;
};
// Stop once the largest change of a normalized entry between successive
// iterations drops below 10^-(digits+1).
struct TargetDigits {
  int digits;
};
using StopRule = std::variant<MaxIterations, TargetDigits>;

struct IterateOptions {
  int precision_ceiling = kDefaultPrecisionCeiling;
  // Decimal places used for the diagnostic residuals when stopping on an
  // iteration count; with TargetDigits the target plus guard digits is used.
  int report_digits = 30;
  // Safety net for TargetDigits.
  int iteration_limit = 10000;
  bool keep_history = false;
};

struct ConvergenceReport {
  int iterations = 0;
  // a_n^(k+1) / a_n^(k), one per step.
  std::vector<Real> eigenvalue_estimates;
  Real closed_form_eigenvalue;
  // max_j |normalized_j^(k+1) - normalized_j^(k)|, one per step.
  std::vector<Real> normalized_changes;
  // max_j |a_j^(k)/a_n^(k) - sin(j*pi/2n)|, one per step (after the step).
  std::vector<Real> residuals;
  std::vector<int> digits_history;
  Real normalized_residual;
  int digits_correct = 0;
};

struct IterationResult {
  DyadicVector state;
  ConvergenceReport report;
  // Filled when IterateOptions::keep_history is set: columns[0] is the seed,
  // auxiliaries[k] sits between columns[k] and columns[k+1].
  std::vector<DyadicVector> columns;
  std::vector<AuxiliaryColumn> auxiliaries;
};

// Throws ConfigurationError for a non-positive stop value or a target beyond
// the precision ceiling, InvalidStateError if TargetDigits never converges
// within the iteration limit.
IterationResult iterate(const DyadicVector& seed, const StopRule& stop,
                        const IterateOptions& options = {});

// numerators[j] / numerators[n], correctly rounded to `precision` decimal
// places. The last entry is exactly 1.
std::vector<Real> normalize(const DyadicVector& state, int precision,
                            int precision_ceiling = kDefaultPrecisionCeiling);

// Normalized entries as exact decimal strings.
std::vector<std::string> normalize_fixed(const DyadicVector& state,
                                         int precision);

// M*v from the explicitly materialized matrix. Test oracle for
// kunstweg_step; T must be a field (Rational, Real).
template <typename T>
std::vector<T> apply_matrix_dense(std::span<const T> v, std::size_t n) {
  if (v.size() != n || n == 0) {
    throw DimensionError("vector length does not match n");
  }
  std::vector<std::vector<T>> m(n, std::vector<T>(n));
  for (std::size_t row = 1; row <= n; ++row) {
    for (std::size_t col = 1; col <= n; ++col) {
      const std::size_t entry = std::min(row, col);
      m[row - 1][col - 1] =
          col == n ? T(static_cast<long>(row)) / T(2) : T(static_cast<long>(entry));
    }
  }
  std::vector<T> out(n, T(0));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) out[row] += m[row][col] * v[col];
  }
  return out;
}

// M^-1 * v via the tridiagonal stencil: rows (2,-1,0..), (..,-1,2,-1,..),
// last row (0,..,0,-2,2). Negated second differences with the boundary
// normalization of the two ends.
template <typename T>
std::vector<T> second_difference_inverse(std::span<const T> v, std::size_t n) {
  if (v.size() != n || n == 0) {
    throw DimensionError("vector length does not match n");
  }
  if (n == 1) return {T(2) * v[0]};
  std::vector<T> out(n);
  out[0] = T(2) * v[0] - v[1];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    out[j] = T(2) * v[j] - v[j - 1] - v[j + 1];
  }
  out[n - 1] = T(2) * v[n - 1] - T(2) * v[n - 2];
  return out;
}

// csc^2(pi/(4n)) / 4, rounded to `precision` decimal places.
Real perron_eigenvalue(std::size_t n, int precision,
                       int precision_ceiling = kDefaultPrecisionCeiling);

// sin(angle * pi / 10800) for 0 <= angle <= 5400 arcminutes, computed by
// argument reduction to [0, pi/4] and a Taylor series, rounded to
// `precision` decimal places. Independent oracle: nothing in the iteration
// depends on it.
Real reference_sine(int arcminutes, int precision,
                    int precision_ceiling = kDefaultPrecisionCeiling);

// sin(fraction * pi/2) for a rational fraction in [0, 1], rounded to
// `precision` decimal places.
Real reference_sine_of_right_angle(const Rational& fraction, int precision,
                                   int precision_ceiling = kDefaultPrecisionCeiling);

// (sin(pi/2n), sin(2pi/2n), ..., 1) to `precision` places.
std::vector<Real> reference_sine_vector(std::size_t n, int precision,
                                        int precision_ceiling = kDefaultPrecisionCeiling);

}  // namespace buergi::kunstweg
