#pragma once

#include <array>

#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/units.hpp"

namespace qwi::oracle {

/// Plane-wave transfer matrix. Maps the (A, B) amplitudes of
/// A e^{ikx} + B e^{-ikx} in the right lead (referenced at the right edge of
/// the structure) to those in the left lead (referenced at the left edge).
///
/// Written from wave matching alone; shares nothing with the impedance
/// engines beyond UnitSystem and the band-edge nudge.
struct TransferMatrix {
  std::array<cplx, 4> entries{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}};  // row-major

  cplx operator()(int row, int col) const { return entries[2 * row + col]; }
  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);
};

/// Wavenumber sqrt(2m(E - V))/hbar on the branch Im k >= 0.
cplx wavenumber(double energy, double potential, const UnitSystem& units);

TransferMatrix transfer_matrix(const PotentialProfile& profile, double energy,
                               const UnitSystem& units);

struct Scattering {
  cplx t;  // transmitted amplitude for unit incidence from the left
  cplx r;  // reflected amplitude
  double transmission = 0.0;  // flux-weighted |t|^2
  double reflection = 0.0;    // |r|^2
};

/// Throws EvanescentLead unless both leads propagate.
Scattering scattering(const PotentialProfile& profile, double energy, const UnitSystem& units);

double oracle_transmission(const PotentialProfile& profile, double energy, const UnitSystem& units);

/// (hbar / i m) psi'/psi at the left edge of the structure, for the state
/// that is a unit outgoing (or decaying) wave in the right lead. Throws
/// DegenerateState at a node of psi.
Impedance oracle_impedance(const PotentialProfile& profile, double energy, const UnitSystem& units);

}  // namespace qwi::oracle
