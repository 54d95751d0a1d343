#include "qwi/transfer_matrix_oracle.hpp"

#include <cmath>

#include "qwi/errors.hpp"

namespace qwi::oracle {
namespace {

constexpr cplx kI{0.0, 1.0};

// (psi, psi') at a point from amplitudes (A, B) of a wave referenced there.
TransferMatrix wave_to_field(cplx k) { return {{cplx{1.0}, cplx{1.0}, kI * k, -kI * k}}; }

TransferMatrix field_to_wave(cplx k) {
  const cplx half_inv = 0.5 / (kI * k);
  return {{cplx{0.5}, half_inv, cplx{0.5}, -half_inv}};
}

// Amplitudes at the left edge of a slab from those at its right edge.
TransferMatrix slab(cplx k, double width) {
  return {{std::exp(-kI * k * width), cplx{}, cplx{}, std::exp(kI * k * width)}};
}

// Field-space propagation across the structure, right edge to left edge.
TransferMatrix field_transfer(const PotentialProfile& profile, double energy,
                              const UnitSystem& units) {
  TransferMatrix m;
  // Physical left-to-right order is regions N, N-1, ..., 1.
  for (auto it = profile.regions().rbegin(); it != profile.regions().rend(); ++it) {
    const cplx k = wavenumber(energy, it->potential, units);
    m = m * wave_to_field(k) * slab(k, it->width) * field_to_wave(k);
  }
  return m;
}

}  // namespace

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
  TransferMatrix c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c.entries[2 * i + j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    }
  }
  return c;
}

cplx wavenumber(double energy, double potential, const UnitSystem& units) {
  return std::sqrt(cplx((energy - potential) / units.kinetic_scale(), 0.0));
}

TransferMatrix transfer_matrix(const PotentialProfile& profile, double energy,
                               const UnitSystem& units) {
  energy = avoid_band_edges(energy, profile);
  const cplx k_left = wavenumber(energy, profile.left_lead_potential(), units);
  const cplx k_right = wavenumber(energy, profile.right_lead_potential(), units);
  return field_to_wave(k_left) * field_transfer(profile, energy, units) * wave_to_field(k_right);
}

Scattering scattering(const PotentialProfile& profile, double energy, const UnitSystem& units) {
  const double e = avoid_band_edges(energy, profile);
  if (e <= profile.left_lead_potential() || e <= profile.right_lead_potential()) {
    throw EvanescentLead("oracle: a lead is not propagating");
  }
  const TransferMatrix m = transfer_matrix(profile, e, units);
  const double k_left = wavenumber(e, profile.left_lead_potential(), units).real();
  const double k_right = wavenumber(e, profile.right_lead_potential(), units).real();
  // Right lead holds t e^{ikx} only; unit incidence fixes A_left = 1.
  Scattering s;
  s.t = 1.0 / m(0, 0);
  s.r = m(1, 0) * s.t;
  s.transmission = (k_right / k_left) * std::norm(s.t);
  s.reflection = std::norm(s.r);
  return s;
}

double oracle_transmission(const PotentialProfile& profile, double energy,
                           const UnitSystem& units) {
  return scattering(profile, energy, units).transmission;
}

Impedance oracle_impedance(const PotentialProfile& profile, double energy,
                           const UnitSystem& units) {
  energy = avoid_band_edges(energy, profile);
  const cplx k_right = wavenumber(energy, profile.right_lead_potential(), units);
  // Outgoing (or decaying) unit wave e^{ikx} at the right edge.
  const cplx psi_right = 1.0;
  const cplx dpsi_right = kI * k_right;
  const TransferMatrix m = field_transfer(profile, energy, units);
  const cplx psi = m(0, 0) * psi_right + m(0, 1) * dpsi_right;
  const cplx dpsi = m(1, 0) * psi_right + m(1, 1) * dpsi_right;
  if (psi == cplx{}) throw DegenerateState("oracle: node of psi at the evaluation plane");
  return {units.velocity_scale() / kI * dpsi / psi};
}

}  // namespace qwi::oracle
