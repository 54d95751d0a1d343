#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/units.hpp"

namespace qwi {

enum class Engine { Analytical, Iterative };

/// Linearly spaced energies, endpoints included.
struct EnergyGrid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t samples = 2;

  /// Throws std::invalid_argument unless start < stop and samples >= 2.
  void validate() const;
  double spacing() const { return (stop - start) / static_cast<double>(samples - 1); }
  double at(std::size_t i) const;
  std::vector<double> points() const;
};

struct Resonance {
  double energy = 0.0;
  double transmission = 0.0;
  /// Full width at half maximum; NaN when T does not fall below half the
  /// peak on both sides within the grid.
  double fwhm = 0.0;
};

struct SweepGap {
  std::size_t index = 0;
  std::string reason;
};

struct Spectrum {
  std::vector<double> energies;
  std::vector<double> transmission;  // NaN at gaps
  std::vector<Resonance> resonances;  // sorted by energy
  std::vector<SweepGap> gaps;
};

double transmission_with(Engine engine, const PotentialProfile& profile, double energy,
                         const UnitSystem& units);
cplx reflection_with(Engine engine, const PotentialProfile& profile, double energy,
                     const UnitSystem& units);

/// Samples T(E) on the grid and locates resonance peaks. Samples where the
/// engine throws are recorded as gaps; the sweep carries on.
///
/// A peak is a grid maximum strictly above its left neighbour and not below
/// its right one. Its position is refined inside the two flanking intervals by
/// Brent minimisation of |r(E)|, which is sharp at unit-transmission
/// resonances where T itself is flat.
Spectrum sweep_transmission(const PotentialProfile& profile, const EnergyGrid& grid, Engine engine,
                            const UnitSystem& units);

/// Real-valued form of the bound-state residual used for bracketing.
///
/// For a real wave function Z_N and z_out are both imaginary, so F is
/// collinear with z_out / z_N. Rotating by that unit phase leaves a real
/// function with the same roots and |value| = |F|.
struct ResidualProjection {
  double value = 0.0;     // Re(F conj(u))
  double off_axis = 0.0;  // Im(F conj(u)); rounding-level at true roots
  double magnitude = 0.0; // |F|
};

ResidualProjection bound_state_projection(const PotentialProfile& profile, double energy,
                                          const UnitSystem& units);

struct BoundStateSet {
  std::vector<double> energies;   // strictly increasing
  std::vector<double> residuals;  // |F| at each root
  std::vector<std::string> warnings;
};

/// Energy tolerance of the bisection.
inline constexpr double kBoundStateTolerance = 1e-12;

/// Scans Re-projected F on `scan_points` energies in [e_min, e_max] and
/// bisects every sign change. Sign changes caused by poles of Z_N or by the
/// branch switch at E = V_N leave a large |F| and are discarded. Throws
/// PropagatingLead if e_max is not below both lead potentials and
/// std::invalid_argument on a malformed window.
BoundStateSet find_bound_states(const PotentialProfile& profile, double e_min, double e_max,
                                std::size_t scan_points, const UnitSystem& units);

}  // namespace qwi
