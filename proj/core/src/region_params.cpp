#include "qwi/region_params.hpp"

#include <cmath>

namespace qwi {
namespace {

constexpr cplx kI{0.0, 1.0};

double step(SweepDirection direction) {
  return direction == SweepDirection::Up ? kBandEdgeTolerance : -kBandEdgeTolerance;
}

double nudge(double energy, double potential, SweepDirection direction) {
  if (std::abs(energy - potential) < kBandEdgeTolerance) return potential + step(direction);
  return energy;
}

}  // namespace

RegionParams region_params(double energy, double potential, const UnitSystem& units,
                           SweepDirection direction) {
  energy = nudge(energy, potential, direction);
  // std::sqrt on a complex with +0 imaginary part is the principal root:
  // real positive for V > E, +i * positive for V < E.
  const cplx gamma = std::sqrt(cplx((potential - energy) / units.kinetic_scale(), 0.0));
  return {gamma, -kI * units.velocity_scale() * gamma};
}

RegionParams lead_params(double energy, double potential, const UnitSystem& units,
                         SweepDirection direction) {
  RegionParams p = region_params(energy, potential, units, direction);
  if (p.gamma.imag() == 0.0) {
    p.gamma = -p.gamma;
    p.z = -p.z;
  }
  return p;
}

double avoid_band_edges(double energy, const PotentialProfile& profile, SweepDirection direction) {
  // A nudge can land within the tolerance of a neighbouring potential; a
  // bounded number of passes settles it.
  for (int pass = 0; pass < 8; ++pass) {
    double moved = nudge(energy, profile.left_lead_potential(), direction);
    moved = nudge(moved, profile.right_lead_potential(), direction);
    for (const Region& r : profile.regions()) moved = nudge(moved, r.potential, direction);
    if (moved == energy) break;
    energy = moved;
  }
  return energy;
}

Cascade make_cascade(const PotentialProfile& profile, double energy, const UnitSystem& units,
                     SweepDirection direction) {
  energy = avoid_band_edges(energy, profile, direction);
  Cascade cascade;
  cascade.load = lead_params(energy, profile.right_lead_potential(), units, direction);
  cascade.out = lead_params(energy, profile.left_lead_potential(), units, direction);
  cascade.layers.reserve(profile.size());
  for (const Region& r : profile.regions()) {
    cascade.layers.push_back({region_params(energy, r.potential, units, direction), r.width});
  }
  return cascade;
}

cplx reflection_amplitude(Impedance input, cplx lead_z) {
  return (input.value - lead_z) / (input.value + lead_z);
}

}  // namespace qwi
