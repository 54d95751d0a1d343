#pragma once

#include <complex>
#include <vector>

#include "qwi/profile.hpp"
#include "qwi/units.hpp"

namespace qwi {

using cplx = std::complex<double>;

/// Energies closer than this to a region potential are nudged off the band edge.
inline constexpr double kBandEdgeTolerance = 1e-12;

enum class SweepDirection { Up, Down };

/// Propagation constant and characteristic impedance of one region at one energy.
///
/// Principal branch: gamma = sqrt(2m(V - E))/hbar, z = -i hbar gamma / m.
/// Above the potential gamma = i k and z = hbar k / m > 0; below it gamma is
/// real positive and z is negative imaginary.
struct RegionParams {
  cplx gamma;
  cplx z;
};

/// Quantum wave impedance (hbar / i m) psi'/psi, a complex velocity.
struct Impedance {
  cplx value;
};

RegionParams region_params(double energy, double potential, const UnitSystem& units,
                           SweepDirection direction = SweepDirection::Up);

/// Parameters of a semi-infinite lead on its outgoing branch: the wave that
/// carries flux away from the structure, or decays away from it when the lead
/// is evanescent. Equal to region_params above the lead potential; below it
/// the sign of (gamma, z) is flipped so that z = +i hbar kappa / m.
RegionParams lead_params(double energy, double potential, const UnitSystem& units,
                         SweepDirection direction = SweepDirection::Up);

/// Moves `energy` to V_j +/- kBandEdgeTolerance if it lies within the
/// tolerance of any potential in the profile, leads included.
double avoid_band_edges(double energy, const PotentialProfile& profile,
                        SweepDirection direction = SweepDirection::Up);

/// One slab of a cascade after evaluation at a fixed energy.
struct CascadeLayer {
  RegionParams params;
  double width = 0.0;
};

/// A profile evaluated at one energy: everything the impedance engines need.
///
/// `layers[0]` is region j = 1. Widths may be zero here, which lets tests
/// probe degenerate limits that PotentialProfile rejects.
struct Cascade {
  RegionParams load;      // right lead, outgoing branch (z_0)
  std::vector<CascadeLayer> layers;
  RegionParams out;       // left lead, outgoing branch (z_out)

  /// z_N: the characteristic impedance of the last region, or of the load when N = 0.
  cplx top_impedance() const { return layers.empty() ? load.z : layers.back().params.z; }
};

Cascade make_cascade(const PotentialProfile& profile, double energy, const UnitSystem& units,
                     SweepDirection direction = SweepDirection::Up);

/// Reflection amplitude (Z - z) / (Z + z) of a lead with impedance z facing Z.
cplx reflection_amplitude(Impedance input, cplx lead_z);

}  // namespace qwi
