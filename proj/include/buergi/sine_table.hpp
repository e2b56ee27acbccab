#pragma once

#include <string_view>
#include <vector>

#include "buergi/numeric.hpp"

namespace buergi {

enum class Provenance { kunstweg, ptolemy, recurrence, reference };

std::string_view to_string(Provenance provenance);

struct SineEntry {
  int angle;  // arcminutes
  Real value;
};

// Sines on a fixed grid step, 2*step, ..., 5400 arcminutes. Values are kept at
// full working precision; `precision` is the number of decimal places the
// table is accurate to and is what exports print. `error_budget` is the
// absolute error the producing method guarantees.
class SineTable {
 public:
  // Throws ConfigurationError unless step divides 5400 and entries cover the
  // grid in order.
  SineTable(int step, std::vector<SineEntry> entries, int precision,
            Provenance provenance, Real error_budget);

  int step() const { return step_; }
  int precision() const { return precision_; }
  Provenance provenance() const { return provenance_; }
  const Real& error_budget() const { return error_budget_; }
  const std::vector<SineEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool on_grid(int arcminutes) const;
  // Value at a grid angle in [0, 5400]; sin 0 = 0. Throws GridError off-grid.
  Real at(int arcminutes) const;

 private:
  int step_;
  std::vector<SineEntry> entries_;
  int precision_;
  Provenance provenance_;
  Real error_budget_;
};

}  // namespace buergi
