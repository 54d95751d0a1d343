#include "qwi/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwi/errors.hpp"

namespace qwi {

PotentialProfile::PotentialProfile(double left_lead_potential, std::vector<Region> regions_from_load,
                                   double right_lead_potential)
    : left_lead_(left_lead_potential),
      regions_(std::move(regions_from_load)),
      right_lead_(right_lead_potential) {
  if (!std::isfinite(left_lead_) || !std::isfinite(right_lead_)) {
    throw InvalidProfile("lead potentials must be finite");
  }
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const Region& r = regions_[i];
    if (!std::isfinite(r.potential)) {
      throw InvalidProfile("region " + std::to_string(i + 1) + ": potential must be finite");
    }
    if (!std::isfinite(r.width) || r.width <= 0.0) {
      throw InvalidProfile("region " + std::to_string(i + 1) + ": width must be positive");
    }
  }
}

PotentialProfile PotentialProfile::from_left_to_right(double left_lead_potential,
                                                      std::vector<Region> regions,
                                                      double right_lead_potential) {
  std::reverse(regions.begin(), regions.end());
  return PotentialProfile(left_lead_potential, std::move(regions), right_lead_potential);
}

std::vector<Region> PotentialProfile::left_to_right() const {
  return {regions_.rbegin(), regions_.rend()};
}

PotentialProfile PotentialProfile::mirrored() const {
  // Physical left-to-right order of the mirror is the load-first order of the original.
  return from_left_to_right(right_lead_, regions_, left_lead_);
}

double PotentialProfile::total_width() const {
  double total = 0.0;
  for (const Region& r : regions_) total += r.width;
  return total;
}

double PotentialProfile::min_potential() const {
  double v = std::min(left_lead_, right_lead_);
  for (const Region& r : regions_) v = std::min(v, r.potential);
  return v;
}

double PotentialProfile::max_potential() const {
  double v = std::max(left_lead_, right_lead_);
  for (const Region& r : regions_) v = std::max(v, r.potential);
  return v;
}

}  // namespace qwi
