#pragma once

#include <complex>
#include <string>

#include "qwi/errors.hpp"
#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"

namespace qwi::detail {

inline void require_propagating_leads(const PotentialProfile& profile, double energy) {
  const double e = avoid_band_edges(energy, profile);
  if (e <= profile.left_lead_potential() || e <= profile.right_lead_potential()) {
    throw EvanescentLead("transmission undefined at E = " + std::to_string(energy) +
                         ": a lead is not propagating");
  }
}

inline void require_evanescent_leads(const PotentialProfile& profile, double energy) {
  const double e = avoid_band_edges(energy, profile);
  if (e >= profile.left_lead_potential() || e >= profile.right_lead_potential()) {
    throw PropagatingLead("bound-state condition needs E below both leads, got E = " +
                          std::to_string(energy));
  }
}

// Real potentials conserve flux, so T = 1 - |r|^2. Values above 1 are left for
// callers to detect; only the negative rounding sliver is clamped.
inline double transmission_from_reflection(cplx reflection) {
  const double t = 1.0 - std::norm(reflection);
  return (t < 0.0 && t > -1e-12) ? 0.0 : t;
}

}  // namespace qwi::detail
