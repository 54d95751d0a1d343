#include "qwi/double_barrier.hpp"

#include <cmath>

#include "qwi/errors.hpp"

namespace qwi {

PotentialProfile SymmetricDoubleBarrier::profile() const {
  return PotentialProfile(outer_potential,
                          {{barrier_potential, barrier_width},
                           {outer_potential, spacer_width},
                           {barrier_potential, barrier_width}},
                          outer_potential);
}

PotentialProfile AsymmetricDoubleBarrier::profile() const {
  return PotentialProfile(input_potential, {regions.begin(), regions.end()}, load_potential);
}

Impedance double_barrier_impedance(const std::array<RegionParams, 4>& params,
                                   const std::array<double, 3>& widths) {
  const cplx z0 = params[0].z, z1 = params[1].z, z2 = params[2].z, z3 = params[3].z;
  const cplx x1 = params[1].gamma * widths[0];
  const cplx x2 = params[2].gamma * widths[1];
  const cplx x3 = params[3].gamma * widths[2];
  // Same uniform shift as the generic engine; the ratio is unchanged.
  const double shift = std::abs(x1.real()) + std::abs(x2.real()) + std::abs(x3.real());

  cplx numerator{}, denominator{};
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      for (int s3 : {+1, -1}) {
        const cplx k = (z0 + double(s1) * z1) * (z1 + double(s1 * s2) * z2) *
                       (z2 + double(s2 * s3) * z3);
        const cplx term = k * std::exp(-double(s1) * x1 - double(s2) * x2 - double(s3) * x3 - shift);
        numerator += term;
        denominator += double(s3) * term;
      }
    }
  }
  if (denominator == cplx{}) throw DegenerateState("impedance pole: vanishing denominator");
  return {z3 * numerator / denominator};
}

Impedance impedance_asymmetric(const AsymmetricDoubleBarrier& spec, double energy,
                               const UnitSystem& units) {
  const Cascade cascade = make_cascade(spec.profile(), energy, units);
  return double_barrier_impedance(
      {cascade.load, cascade.layers[0].params, cascade.layers[1].params, cascade.layers[2].params},
      {cascade.layers[0].width, cascade.layers[1].width, cascade.layers[2].width});
}

Impedance symmetric_double_barrier_impedance(const RegionParams& outer, const RegionParams& barrier,
                                             double barrier_width, double spacer_width) {
  const cplx z = outer.z;
  const cplx zb = barrier.z;
  const cplx a = barrier.gamma * barrier_width;  // gb l1
  const cplx b = outer.gamma * spacer_width;     // g l2
  const double shift = 2.0 * std::abs(a.real()) + std::abs(b.real());

  const cplx sum = zb + z;
  const cplx diff = zb - z;
  const cplx e_mm = std::exp(-b - 2.0 * a - shift);
  const cplx e_mp = std::exp(-b + 2.0 * a - shift);
  const cplx e_pm = std::exp(b - 2.0 * a - shift);
  const cplx e_pp = std::exp(b + 2.0 * a - shift);
  // 2 sh(b) e^{-shift}
  const cplx sh2 = std::exp(b - shift) - std::exp(-b - shift);

  const cplx numerator = 2.0 * zb * (zb * zb - z * z) * sh2 + sum * sum * sum * e_mm +
                         diff * diff * diff * e_mp - diff * diff * sum * e_pm -
                         sum * sum * diff * e_pp;
  const cplx denominator = -2.0 * z * (zb * zb - z * z) * sh2 + sum * sum * sum * e_mm -
                           diff * diff * diff * e_mp - diff * diff * sum * e_pm +
                           sum * sum * diff * e_pp;
  if (denominator == cplx{}) throw DegenerateState("impedance pole: vanishing denominator");
  return {zb * numerator / denominator};
}

Impedance impedance_symmetric(const SymmetricDoubleBarrier& spec, double energy,
                              const UnitSystem& units) {
  const Cascade cascade = make_cascade(spec.profile(), energy, units);
  // The load stands in for the spacer: interior regions are branch-invariant,
  // and the closed form needs z_0 = z_2 literally.
  return symmetric_double_barrier_impedance(cascade.load, cascade.layers[0].params,
                                            spec.barrier_width, spec.spacer_width);
}

}  // namespace qwi
