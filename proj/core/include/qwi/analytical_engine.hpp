#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/units.hpp"

namespace qwi {

/// Largest cascade the sign-sum enumerates (2^24 terms).
inline constexpr std::size_t kMaxAnalyticalRegions = 24;

/// An assignment i_j in {+1, -1} for j = 1..N, stored as a bit pattern with
/// bit (j - 1) set when i_j = -1. i_0 is +1 by convention.
class SignVector {
 public:
  SignVector(std::uint32_t minus_bits, std::size_t length) : bits_(minus_bits), length_(length) {}

  std::size_t size() const { return length_; }
  std::uint32_t bits() const { return bits_; }

  /// i_j for j in 0..N.
  int operator[](std::size_t j) const {
    return (j == 0 || ((bits_ >> (j - 1)) & 1U) == 0) ? 1 : -1;
  }

  /// i_N, the sign that separates numerator from denominator.
  int last() const { return (*this)[length_]; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::uint32_t bits_;
  std::size_t length_;
};

/// One term K(i) exp(-sum_j i_j gamma_j l_j) of the closed form.
struct AnalyticalTerm {
  SignVector signs;
  cplx coefficient;  // K = 2^-N prod_j (z_{j-1} + i_j i_{j-1} z_j)
  cplx exponent;     // -sum_j i_j gamma_j l_j, unshifted
};

/// All 2^N terms in ascending bit-pattern order.
struct TermExpansion {
  std::vector<AnalyticalTerm> terms;
  /// max over sign vectors of Re(exponent) = sum_j |Re(gamma_j l_j)|.
  double exponent_shift = 0.0;
  /// z_N, the prefactor of the impedance ratio.
  cplx top_impedance;

  /// K exp(exponent - exponent_shift).
  cplx shifted_value(const AnalyticalTerm& term) const;
};

/// Throws ProfileTooLarge if the cascade has more than kMaxAnalyticalRegions layers.
TermExpansion enumerate_terms(const Cascade& cascade);
TermExpansion enumerate_terms(const PotentialProfile& profile, double energy,
                              const UnitSystem& units);

/// Numerator and denominator sums of the closed form, both scaled by
/// exp(-exponent_shift). The ratio is what matters.
struct SignSums {
  cplx numerator;    // sum K e^{x}
  cplx denominator;  // sum i_N K e^{x}
  double exponent_shift = 0.0;
};

/// Streams all 2^N terms without storing them. Summation is compensated and
/// runs in ascending bit-pattern order, so results are reproducible.
SignSums sign_sums(const Cascade& cascade);

/// Z(x_N) = z_N * numerator / denominator. Throws ProfileTooLarge or
/// DegenerateState (pole of Z).
Impedance input_impedance_analytical(const Cascade& cascade);
Impedance input_impedance_analytical(const PotentialProfile& profile, double energy,
                                     const UnitSystem& units);

/// sum (z_N - i_N z_out) K e^x / sum (z_N + i_N z_out) K e^x, the reflection
/// amplitude seen from the left lead. Profiles larger than
/// kMaxAnalyticalRegions go through the iterative engine.
cplx reflection_analytical(const PotentialProfile& profile, double energy, const UnitSystem& units);

/// T(E) = 1 - |reflection|^2. Throws EvanescentLead unless both leads propagate.
double transmission(const PotentialProfile& profile, double energy, const UnitSystem& units);

/// F(E) = numerator / denominator + z_out / z_N. Bound states are the roots.
/// Throws PropagatingLead unless E lies below both lead potentials.
cplx bound_state_residual(const PotentialProfile& profile, double energy, const UnitSystem& units);

}  // namespace qwi
