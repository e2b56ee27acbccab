#include "buergi/sine_table.hpp"

#include <string>

#include "buergi/errors.hpp"

namespace buergi {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kunstweg: return "kunstweg";
    case Provenance::ptolemy: return "ptolemy";
    case Provenance::recurrence: return "recurrence";
    case Provenance::reference: return "reference";
  }
  return "unknown";
}

SineTable::SineTable(int step, std::vector<SineEntry> entries, int precision,
                     Provenance provenance, Real error_budget)
    : step_(step),
      entries_(std::move(entries)),
      precision_(precision),
      provenance_(provenance),
      error_budget_(std::move(error_budget)) {
  if (step_ <= 0 || 5400 % step_ != 0) {
    throw ConfigurationError("table step must divide 5400 arcminutes");
  }
  if (entries_.size() != static_cast<std::size_t>(5400 / step_)) {
    throw ConfigurationError("table does not cover the full quadrant");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].angle != static_cast<int>(i + 1) * step_) {
      throw ConfigurationError("table entries out of grid order");
    }
  }
}

bool SineTable::on_grid(int arcminutes) const {
  return arcminutes >= 0 && arcminutes <= 5400 && arcminutes % step_ == 0;
}

Real SineTable::at(int arcminutes) const {
  if (!on_grid(arcminutes)) {
    throw GridError("angle " + std::to_string(arcminutes) +
                    "' is not on the table grid");
  }
  if (arcminutes == 0) return 0;
  return entries_[static_cast<std::size_t>(arcminutes / step_ - 1)].value;
}

}  // namespace buergi
