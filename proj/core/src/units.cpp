#include "qwi/units.hpp"

#include <cmath>

#include "qwi/errors.hpp"

namespace qwi {
namespace {

// CODATA 2018.
constexpr double kHbar = 1.054571817e-34;          // J s
constexpr double kElectronMass = 9.1093837015e-31;  // kg
constexpr double kElectronVolt = 1.602176634e-19;   // J
constexpr double kNanometer = 1e-9;                  // m

}  // namespace

UnitSystem::UnitSystem(UnitMode mode, double mass_ratio) : mode_(mode), mass_ratio_(mass_ratio) {
  if (mode == UnitMode::Natural) {
    kinetic_scale_ = 1.0;
    velocity_scale_ = 2.0;
    return;
  }
  const double mass = mass_ratio * kElectronMass;
  kinetic_scale_ = kHbar * kHbar / (2.0 * mass) / kElectronVolt / (kNanometer * kNanometer);
  velocity_scale_ = kHbar / mass / kNanometer;
}

UnitSystem UnitSystem::nanometer_electron_volt(double effective_mass_ratio) {
  if (!std::isfinite(effective_mass_ratio) || effective_mass_ratio <= 0.0) {
    throw InvalidProfile("effective mass ratio must be positive");
  }
  return UnitSystem(UnitMode::NanoElectronVolt, effective_mass_ratio);
}

std::string_view UnitSystem::name() const {
  return mode_ == UnitMode::Natural ? "natural" : "nm-ev";
}

}  // namespace qwi
