#include "buergi/prosthaphaeresis.hpp"

#include <cstdlib>
#include <string>

#include "buergi/errors.hpp"

namespace buergi::prosthaphaeresis {
namespace {

struct Lookup {
  Real value;
  Real interpolation_error = 0;
};

// sin of a reduced angle in [-5400, 5400]; sin(-x) = -sin x.
Lookup lookup(int angle, const SineTable& table, bool interpolate) {
  const int magnitude = std::abs(angle);
  Lookup out;
  if (table.on_grid(magnitude)) {
    out.value = table.at(magnitude);
  } else if (!interpolate) {
    throw GridError("lookup angle " + std::to_string(angle) +
                    "' is off the table grid");
  } else {
    const int step = table.step();
    const int below = magnitude / step * step;
    const Real t = Real(magnitude - below) / step;
    out.value = (1 - t) * table.at(below) + t * table.at(below + step);
    // |sin''| <= 1, so chord interpolation errs by at most h^2/8.
    const Real h = Real(step) * pi() / 10800;
    out.interpolation_error = h * h / 8;
  }
  if (angle < 0) out.value = -out.value;
  return out;
}

}  // namespace

int reduce_to_quadrant(int arcminutes) {
  if (arcminutes > 5400) return 10800 - arcminutes;
  if (arcminutes < -5400) return -10800 - arcminutes;
  return arcminutes;
}

ProstResult prost_multiply(int alpha, int beta, const SineTable& table,
                           const ProstOptions& options) {
  if (alpha <= 0 || alpha > 5400 || beta <= 0 || beta > 5400) {
    throw DomainError("prosthaphaeresis angles must lie in (0, 5400]");
  }
  const int first = reduce_to_quadrant(5400 - alpha + beta);
  const int second = reduce_to_quadrant(5400 - alpha - beta);
  const Lookup high = lookup(first, table, options.interpolate);
  const Lookup low = lookup(second, table, options.interpolate);

  ProstResult result;
  result.product_estimate = (high.value - low.value) / 2;
  result.table_lookups = {high.value, low.value};
  result.lookup_angles = {first, second};
  // Half the sum of the two lookup errors, plus a working-precision floor.
  result.absolute_error_bound =
      (2 * table.error_budget() + high.interpolation_error +
       low.interpolation_error) / 2 + pow10(-100);
  return result;
}

}  // namespace buergi::prosthaphaeresis
