#pragma once

#include <string_view>

namespace qwi {

enum class UnitMode { Natural, NanoElectronVolt };

/// Unit convention shared by every engine.
///
/// Natural mode fixes hbar = 1 and 2m = 1, so the propagation constant is
/// sqrt(V - E) and impedances are velocities with hbar/m = 2.
/// NanoElectronVolt mode measures lengths in nm, energies in eV and
/// impedances (velocities) in m/s, for a particle of mass
/// effective_mass_ratio * m_e.
class UnitSystem {
 public:
  static UnitSystem natural() { return UnitSystem(UnitMode::Natural, 1.0); }
  /// Throws InvalidProfile unless effective_mass_ratio is finite and > 0.
  static UnitSystem nanometer_electron_volt(double effective_mass_ratio);

  UnitMode mode() const { return mode_; }
  double effective_mass_ratio() const { return mass_ratio_; }

  /// hbar^2 / (2m) in energy * length^2.
  double kinetic_scale() const { return kinetic_scale_; }
  /// hbar / m in velocity * length.
  double velocity_scale() const { return velocity_scale_; }

  std::string_view name() const;

  friend bool operator==(const UnitSystem&, const UnitSystem&) = default;

 private:
  UnitSystem(UnitMode mode, double mass_ratio);

  UnitMode mode_;
  double mass_ratio_;
  double kinetic_scale_;
  double velocity_scale_;
};

}  // namespace qwi
