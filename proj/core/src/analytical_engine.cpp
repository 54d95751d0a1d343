#include "qwi/analytical_engine.hpp"

#include <cmath>
#include <string>

#include "qwi/errors.hpp"
#include "qwi/iterative_engine.hpp"
#include "transmission_common.hpp"

namespace qwi {
namespace {

// Neumaier compensated sum, applied to each component.
class CompensatedSum {
 public:
  void add(cplx v) {
    add(re_, re_carry_, v.real());
    add(im_, im_carry_, v.imag());
  }
  cplx value() const { return {re_ + re_carry_, im_ + im_carry_}; }

 private:
  static void add(double& sum, double& carry, double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, re_carry_ = 0.0, im_ = 0.0, im_carry_ = 0.0;
};

void check_size(const Cascade& cascade) {
  if (cascade.layers.size() > kMaxAnalyticalRegions) {
    throw ProfileTooLarge("analytical engine enumerates at most " +
                          std::to_string(kMaxAnalyticalRegions) + " regions, got " +
                          std::to_string(cascade.layers.size()));
  }
}

double exponent_shift(const Cascade& cascade) {
  double shift = 0.0;
  for (const CascadeLayer& layer : cascade.layers) {
    shift += std::abs((layer.params.gamma * layer.width).real());
  }
  return shift;
}

// Depth-first walk over sign vectors. Level j picks i_j; the coupling factor
// (z_j + i_{j+1} i_j z_{j+1}) is complete once both signs are known. Each
// level contributes exp(-i_j g_j l_j - |Re g_j l_j|) / 2, so the product over
// levels carries the uniform shift without forming large exponentials.
class SignSumWalker {
 public:
  explicit SignSumWalker(const Cascade& cascade) : cascade_(cascade) {
    const std::size_t n = cascade.layers.size();
    plus_.resize(n);
    minus_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx x = cascade.layers[k].params.gamma * cascade.layers[k].width;
      const double a = std::abs(x.real());
      plus_[k] = 0.5 * std::exp(-x - a);
      minus_[k] = 0.5 * std::exp(x - a);
    }
  }

  SignSums run() {
    const std::size_t n = cascade_.layers.size();
    if (n == 0) return {cplx{1.0}, cplx{1.0}, 0.0};
    descend(n, +1, +1, cplx{1.0});
    return {numerator_.value(), denominator_.value(), exponent_shift(cascade_)};
  }

 private:
  cplx z(std::size_t j) const { return j == 0 ? cascade_.load.z : cascade_.layers[j - 1].params.z; }

  void descend(std::size_t j, int sign_above, int sign_last, cplx partial) {
    const std::size_t n = cascade_.layers.size();
    for (int s : {+1, -1}) {
      if (j == n) sign_last = s;
      cplx p = partial * (s > 0 ? plus_[j - 1] : minus_[j - 1]);
      if (j < n) p *= z(j) + static_cast<double>(sign_above * s) * z(j + 1);
      if (j == 1) {
        p *= z(0) + static_cast<double>(s) * z(1);
        numerator_.add(p);
        denominator_.add(static_cast<double>(sign_last) * p);
      } else {
        descend(j - 1, s, sign_last, p);
      }
    }
  }

  const Cascade& cascade_;
  std::vector<cplx> plus_;
  std::vector<cplx> minus_;
  CompensatedSum numerator_;
  CompensatedSum denominator_;
};

}  // namespace

cplx TermExpansion::shifted_value(const AnalyticalTerm& term) const {
  return term.coefficient * std::exp(term.exponent - exponent_shift);
}

TermExpansion enumerate_terms(const Cascade& cascade) {
  check_size(cascade);
  const std::size_t n = cascade.layers.size();
  const auto z = [&](std::size_t j) {
    return j == 0 ? cascade.load.z : cascade.layers[j - 1].params.z;
  };
  const double norm = std::ldexp(1.0, -static_cast<int>(n));

  TermExpansion expansion;
  expansion.exponent_shift = exponent_shift(cascade);
  expansion.top_impedance = cascade.top_impedance();
  const std::uint32_t count = std::uint32_t{1} << n;
  expansion.terms.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const SignVector signs(bits, n);
    cplx k = norm;
    cplx exponent{};
    for (std::size_t j = 1; j <= n; ++j) {
      const double coupling = signs[j] * signs[j - 1];
      k *= z(j - 1) + coupling * z(j);
      const CascadeLayer& layer = cascade.layers[j - 1];
      exponent -= static_cast<double>(signs[j]) * layer.params.gamma * layer.width;
    }
    expansion.terms.push_back({signs, k, exponent});
  }
  return expansion;
}

TermExpansion enumerate_terms(const PotentialProfile& profile, double energy,
                              const UnitSystem& units) {
  return enumerate_terms(make_cascade(profile, energy, units));
}

SignSums sign_sums(const Cascade& cascade) {
  check_size(cascade);
  return SignSumWalker(cascade).run();
}

Impedance input_impedance_analytical(const Cascade& cascade) {
  const SignSums sums = sign_sums(cascade);
  if (sums.denominator == cplx{}) throw DegenerateState("impedance pole: vanishing denominator");
  return {cascade.top_impedance() * sums.numerator / sums.denominator};
}

Impedance input_impedance_analytical(const PotentialProfile& profile, double energy,
                                     const UnitSystem& units) {
  return input_impedance_analytical(make_cascade(profile, energy, units));
}

cplx reflection_analytical(const PotentialProfile& profile, double energy,
                           const UnitSystem& units) {
  if (profile.size() > kMaxAnalyticalRegions) return reflection_iterative(profile, energy, units);
  const Cascade cascade = make_cascade(profile, energy, units);
  const SignSums sums = sign_sums(cascade);
  // sum (z_N - i_N z_out) K e^x = z_N * numerator - z_out * denominator.
  const cplx zn_num = cascade.top_impedance() * sums.numerator;
  const cplx out_den = cascade.out.z * sums.denominator;
  const cplx denominator = zn_num + out_den;
  if (denominator == cplx{}) throw DegenerateState("reflection denominator vanished");
  return (zn_num - out_den) / denominator;
}

double transmission(const PotentialProfile& profile, double energy, const UnitSystem& units) {
  detail::require_propagating_leads(profile, energy);
  return detail::transmission_from_reflection(reflection_analytical(profile, energy, units));
}

cplx bound_state_residual(const PotentialProfile& profile, double energy,
                          const UnitSystem& units) {
  detail::require_evanescent_leads(profile, energy);
  const Cascade cascade = make_cascade(profile, energy, units);
  const cplx zn = cascade.top_impedance();
  cplx ratio;
  if (profile.size() > kMaxAnalyticalRegions) {
    ratio = input_impedance_iterative(cascade).value / zn;
  } else {
    const SignSums sums = sign_sums(cascade);
    if (sums.denominator == cplx{}) throw DegenerateState("impedance pole: vanishing denominator");
    ratio = sums.numerator / sums.denominator;
  }
  return ratio + cascade.out.z / zn;
}

}  // namespace qwi
