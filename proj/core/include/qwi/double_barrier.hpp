#pragma once

#include <array>

#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/units.hpp"

namespace qwi {

/// Symmetric double barrier (or well): outer medium | barrier | spacer |
/// barrier | outer medium. The spacer and both leads share outer_potential.
struct SymmetricDoubleBarrier {
  double outer_potential = 0.0;
  double barrier_potential = 0.0;
  double barrier_width = 0.0;  // l_1 (= l_3)
  double spacer_width = 0.0;   // l_2

  PotentialProfile profile() const;
};

/// Three arbitrary regions between a load lead and an input lead.
struct AsymmetricDoubleBarrier {
  double load_potential = 0.0;         // right lead, z_0
  std::array<Region, 3> regions{};     // j = 1, 2, 3 from the load side
  double input_potential = 0.0;        // left lead, z_out

  PotentialProfile profile() const;
};

/// Eight-term closed form with coupled signs (z_0 +-1 z_1)(z_1 +-12 z_2)(z_2 +-23 z_3).
/// `params[0]` is the load; `params[1..3]` are the three regions.
Impedance double_barrier_impedance(const std::array<RegionParams, 4>& params,
                                   const std::array<double, 3>& widths);

Impedance impedance_asymmetric(const AsymmetricDoubleBarrier& spec, double energy,
                               const UnitSystem& units);

/// Expanded symmetric form in terms of the outer medium (z, g) and barrier
/// (zb, gb):
///   Z = zb [4 zb (zb^2 - z^2) sh(g l2) + (zb+z)^3 e^{-g l2 - 2 gb l1}
///           + (zb-z)^3 e^{-g l2 + 2 gb l1} - (zb-z)^2 (zb+z) e^{g l2 - 2 gb l1}
///           - (zb+z)^2 (zb-z) e^{g l2 + 2 gb l1}]
///        / [-4 z (zb^2 - z^2) sh(g l2) + (zb+z)^3 e^{-g l2 - 2 gb l1}
///           - (zb-z)^3 e^{-g l2 + 2 gb l1} - (zb-z)^2 (zb+z) e^{g l2 - 2 gb l1}
///           + (zb+z)^2 (zb-z) e^{g l2 + 2 gb l1}]
Impedance symmetric_double_barrier_impedance(const RegionParams& outer, const RegionParams& barrier,
                                             double barrier_width, double spacer_width);

Impedance impedance_symmetric(const SymmetricDoubleBarrier& spec, double energy,
                              const UnitSystem& units);

}  // namespace qwi
