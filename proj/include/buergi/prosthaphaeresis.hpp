#pragma once

// Multiplication by table lookup:
//   sin a * sin b = 1/2 [sin(90deg - a + b) - sin(90deg - a - b)].

#include <array>

#include "buergi/numeric.hpp"
#include "buergi/sine_table.hpp"

namespace buergi::prosthaphaeresis {

struct ProstOptions {
  // Linear interpolation between grid entries for off-grid arguments.
  bool interpolate = false;
};

struct ProstResult {
  Real product_estimate;
  // sin(90deg - a + b) and sin(90deg - a - b) as looked up.
  std::array<Real, 2> table_lookups;
  // Reduced lookup arguments in [-5400, 5400] arcminutes.
  std::array<int, 2> lookup_angles;
  Real absolute_error_bound;
};

// Map any angle in [-10800, 10800] arcminutes to [-5400, 5400] with the same
// sine, using sin(90deg + x) = sin(90deg - x).
int reduce_to_quadrant(int arcminutes);

// Angles in arcminutes, both in (0, 5400]. Throws DomainError for angles out
// of range and GridError when a lookup argument is off the table grid and
// interpolation is disabled.
ProstResult prost_multiply(int alpha, int beta, const SineTable& table,
                           const ProstOptions& options = {});

}  // namespace buergi::prosthaphaeresis
