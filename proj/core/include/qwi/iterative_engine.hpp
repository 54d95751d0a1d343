#pragma once

#include <array>

#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/units.hpp"

namespace qwi {

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<cplx, 2>, 2>;

/// Image of the (1, 1) seed under the cascade product. Only top/bottom is
/// meaningful; any nonzero common factor is an equivalence.
struct StateVector {
  cplx top{1.0, 0.0};
  cplx bottom{1.0, 0.0};
};

/// One cascade step, raw (unscaled):
///   [[z_{i-1} ch(g l), -z_i sh(g l)], [-z_{i-1} sh(g l), z_i ch(g l)]]
/// Overflows for Re(g l) beyond ~710; the engine uses a scaled variant.
Matrix2 step_matrix(const RegionParams& inner, const RegionParams& region, double width);

/// Applies steps i = 1..N to the (1, 1) seed, rescaling after every step so
/// the larger entry has unit magnitude.
StateVector propagate_state(const Cascade& cascade);

/// Z(x_N) = z_N top / bottom. Throws DegenerateState at a pole
/// (|bottom| < 1e-300 after normalization).
Impedance input_impedance_iterative(const Cascade& cascade);
Impedance input_impedance_iterative(const PotentialProfile& profile, double energy,
                                    const UnitSystem& units);

/// Reflection amplitude at the input plane for a wave incident from the left lead.
cplx reflection_iterative(const PotentialProfile& profile, double energy, const UnitSystem& units);

/// 1 - |reflection|^2. Throws EvanescentLead unless both leads propagate.
double transmission_iterative(const PotentialProfile& profile, double energy,
                              const UnitSystem& units);

}  // namespace qwi
