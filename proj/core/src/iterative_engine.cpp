#include "qwi/iterative_engine.hpp"

#include <algorithm>
#include <cmath>

#include "qwi/errors.hpp"
#include "transmission_common.hpp"

namespace qwi {
namespace {

// ch(x) and sh(x) multiplied by exp(-|Re x|); both stay bounded for any x.
struct ScaledHyperbolic {
  cplx ch;
  cplx sh;
};

ScaledHyperbolic scaled_hyperbolic(cplx x) {
  const double a = std::abs(x.real());
  if (a < 20.0) {
    const double s = std::exp(-a);
    return {std::cosh(x) * s, std::sinh(x) * s};
  }
  // e^{x - a} has unit-or-smaller modulus; the e^{-x - a} partner is ~e^{-2a}.
  const cplx up = std::exp(x - a);
  const cplx down = std::exp(-x - a);
  return {0.5 * (up + down), 0.5 * (up - down)};
}

}  // namespace

Matrix2 step_matrix(const RegionParams& inner, const RegionParams& region, double width) {
  const cplx x = region.gamma * width;
  const cplx ch = std::cosh(x);
  const cplx sh = std::sinh(x);
  return {{{inner.z * ch, -region.z * sh}, {-inner.z * sh, region.z * ch}}};
}

StateVector propagate_state(const Cascade& cascade) {
  StateVector state;
  const RegionParams* inner = &cascade.load;
  for (const CascadeLayer& layer : cascade.layers) {
    const auto [ch, sh] = scaled_hyperbolic(layer.params.gamma * layer.width);
    const cplx zi = inner->z;
    const cplx zr = layer.params.z;
    const cplx top = zi * ch * state.top - zr * sh * state.bottom;
    const cplx bottom = -zi * sh * state.top + zr * ch * state.bottom;
    const double scale = std::max(std::abs(top), std::abs(bottom));
    if (scale == 0.0 || !std::isfinite(scale)) {
      throw DegenerateState("cascade state collapsed at a band edge");
    }
    state.top = top / scale;
    state.bottom = bottom / scale;
    inner = &layer.params;
  }
  return state;
}

Impedance input_impedance_iterative(const Cascade& cascade) {
  const StateVector state = propagate_state(cascade);
  if (std::abs(state.bottom) < 1e-300) {
    throw DegenerateState("impedance pole: vanishing denominator");
  }
  return {cascade.top_impedance() * state.top / state.bottom};
}

Impedance input_impedance_iterative(const PotentialProfile& profile, double energy,
                                    const UnitSystem& units) {
  return input_impedance_iterative(make_cascade(profile, energy, units));
}

cplx reflection_iterative(const PotentialProfile& profile, double energy, const UnitSystem& units) {
  const Cascade cascade = make_cascade(profile, energy, units);
  const StateVector state = propagate_state(cascade);
  // (Z - z_out) / (Z + z_out) with Z = z_N top / bottom, cleared of the division.
  const cplx zn_top = cascade.top_impedance() * state.top;
  const cplx out_bottom = cascade.out.z * state.bottom;
  const cplx denominator = zn_top + out_bottom;
  if (denominator == cplx{}) throw DegenerateState("reflection denominator vanished");
  return (zn_top - out_bottom) / denominator;
}

double transmission_iterative(const PotentialProfile& profile, double energy,
                              const UnitSystem& units) {
  detail::require_propagating_leads(profile, energy);
  return detail::transmission_from_reflection(reflection_iterative(profile, energy, units));
}

}  // namespace qwi
