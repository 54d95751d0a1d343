#include "qwi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "qwi/analytical_engine.hpp"
#include "qwi/errors.hpp"
#include "qwi/iterative_engine.hpp"
#include "transmission_common.hpp"

namespace qwi {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Accepting a converged bracket as a root. Genuine roots end near 1e-12;
// poles and branch switches leave |F| of order one or larger.
constexpr double kRootAcceptance = 1e-6;
constexpr double kOffAxisTolerance = 1e-10;

double interpolate_crossing(double e0, double t0, double e1, double t1, double level) {
  if (t1 == t0) return 0.5 * (e0 + e1);
  return e0 + (level - t0) * (e1 - e0) / (t1 - t0);
}

double full_width_half_maximum(const Spectrum& s, std::size_t peak, double peak_t) {
  const double half = 0.5 * peak_t;
  double left = kNaN, right = kNaN;
  for (std::size_t i = peak; i > 0; --i) {
    const double t = s.transmission[i - 1];
    if (std::isnan(t)) break;
    if (t <= half) {
      left = interpolate_crossing(s.energies[i - 1], t, s.energies[i], s.transmission[i], half);
      break;
    }
  }
  for (std::size_t i = peak; i + 1 < s.energies.size(); ++i) {
    const double t = s.transmission[i + 1];
    if (std::isnan(t)) break;
    if (t <= half) {
      right = interpolate_crossing(s.energies[i], s.transmission[i], s.energies[i + 1], t, half);
      break;
    }
  }
  if (std::isnan(left) || std::isnan(right)) return kNaN;
  return right - left;
}

constexpr int kRefinePasses = 4;
constexpr double kZoomFraction = 1e-5;

Resonance refine_peak(const Spectrum& s, std::size_t i, Engine engine,
                      const PotentialProfile& profile, const UnitSystem& units) {
  Resonance peak{s.energies[i], s.transmission[i], kNaN};
  const auto reflection_magnitude = [&](double e) {
    try {
      return std::abs(reflection_with(engine, profile, e, units));
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  // Brent stops near sqrt(epsilon) of the bracket, far wider than a sharp
  // resonance, so each pass minimizes over a unit bracket and zooms in.
  double lo = s.energies[i - 1];
  double hi = s.energies[i + 1];
  double energy = s.energies[i];
  double magnitude = reflection_magnitude(energy);
  for (int pass = 0; pass < kRefinePasses; ++pass) {
    const double span = hi - lo;
    std::uintmax_t max_iter = 200;
    const auto [x, m] = boost::math::tools::brent_find_minima(
        [&](double u) { return reflection_magnitude(lo + u * span); }, 0.0, 1.0,
        std::numeric_limits<double>::digits / 2, max_iter);
    if (m < magnitude) {
      energy = lo + x * span;
      magnitude = m;
    }
    const double half = kZoomFraction * span;
    if (half <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(energy)) break;
    lo = std::max(lo, energy - half);
    hi = std::min(hi, energy + half);
  }
  const double t = 1.0 - magnitude * magnitude;
  if (std::isfinite(t) && t >= peak.transmission) {
    peak.energy = energy;
    peak.transmission = t;
  }
  peak.fwhm = full_width_half_maximum(s, i, peak.transmission);
  return peak;
}

std::pair<cplx, cplx> lead_and_top_impedance(const PotentialProfile& profile, double energy,
                                             const UnitSystem& units) {
  const Cascade cascade = make_cascade(profile, energy, units);
  return {cascade.out.z, cascade.top_impedance()};
}

}  // namespace

void EnergyGrid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw std::invalid_argument("energy grid needs start < stop");
  }
  if (samples < 2) throw std::invalid_argument("energy grid needs at least 2 samples");
}

double EnergyGrid::at(std::size_t i) const {
  if (i + 1 == samples) return stop;
  return start + spacing() * static_cast<double>(i);
}

std::vector<double> EnergyGrid::points() const {
  std::vector<double> out(samples);
  for (std::size_t i = 0; i < samples; ++i) out[i] = at(i);
  return out;
}

double transmission_with(Engine engine, const PotentialProfile& profile, double energy,
                         const UnitSystem& units) {
  return engine == Engine::Analytical ? transmission(profile, energy, units)
                                      : transmission_iterative(profile, energy, units);
}

cplx reflection_with(Engine engine, const PotentialProfile& profile, double energy,
                     const UnitSystem& units) {
  detail::require_propagating_leads(profile, energy);
  return engine == Engine::Analytical ? reflection_analytical(profile, energy, units)
                                      : reflection_iterative(profile, energy, units);
}

Spectrum sweep_transmission(const PotentialProfile& profile, const EnergyGrid& grid, Engine engine,
                            const UnitSystem& units) {
  grid.validate();
  Spectrum s;
  s.energies = grid.points();
  s.transmission.assign(grid.samples, kNaN);
  for (std::size_t i = 0; i < grid.samples; ++i) {
    try {
      s.transmission[i] = transmission_with(engine, profile, s.energies[i], units);
    } catch (const Error& e) {
      s.gaps.push_back({i, e.what()});
    }
  }

  constexpr double kRise = 1e-12;
  for (std::size_t i = 1; i + 1 < grid.samples; ++i) {
    const double left = s.transmission[i - 1];
    const double mid = s.transmission[i];
    const double right = s.transmission[i + 1];
    if (std::isnan(left) || std::isnan(mid) || std::isnan(right)) continue;
    if (mid > left + kRise && mid >= right) {
      s.resonances.push_back(refine_peak(s, i, engine, profile, units));
    }
  }
  std::sort(s.resonances.begin(), s.resonances.end(),
            [](const Resonance& a, const Resonance& b) { return a.energy < b.energy; });
  return s;
}

ResidualProjection bound_state_projection(const PotentialProfile& profile, double energy,
                                          const UnitSystem& units) {
  const cplx f = bound_state_residual(profile, energy, units);
  const auto [out_z, top_z] = lead_and_top_impedance(profile, energy, units);
  const cplx axis = out_z / top_z;
  const cplx rotated = f * std::conj(axis / std::abs(axis));
  return {rotated.real(), rotated.imag(), std::abs(f)};
}

BoundStateSet find_bound_states(const PotentialProfile& profile, double e_min, double e_max,
                                std::size_t scan_points, const UnitSystem& units) {
  EnergyGrid{e_min, e_max, scan_points}.validate();
  if (e_max >= profile.left_lead_potential() || e_max >= profile.right_lead_potential()) {
    throw PropagatingLead("bound-state window must lie below both lead potentials");
  }

  const EnergyGrid grid{e_min, e_max, scan_points};
  std::vector<double> energies = grid.points();
  std::vector<double> values(scan_points, kNaN);
  for (std::size_t i = 0; i < scan_points; ++i) {
    try {
      values[i] = bound_state_projection(profile, energies[i], units).value;
    } catch (const Error&) {
    }
  }

  BoundStateSet result;
  const auto evaluate = [&](double e) { return bound_state_projection(profile, e, units); };

  for (std::size_t i = 0; i + 1 < scan_points; ++i) {
    double a = energies[i], b = energies[i + 1];
    double fa = values[i], fb = values[i + 1];
    if (std::isnan(fa) || std::isnan(fb)) continue;
    if (fb == 0.0) {
      if (i + 2 < scan_points) continue;  // picked up as fa == 0 by the next interval
      a = b;
      fa = fb;
    } else if (fa == 0.0) {
      b = a;
      fb = fa;
    } else if ((fa < 0.0) == (fb < 0.0)) {
      continue;
    }
    bool failed = false;
    while (b - a > kBoundStateTolerance) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      double fm;
      try {
        fm = evaluate(mid).value;
      } catch (const Error&) {
        failed = true;
        break;
      }
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
        fb = fm;
      }
    }
    if (failed) continue;
    const double root = std::abs(fa) <= std::abs(fb) ? a : b;
    ResidualProjection p;
    try {
      p = evaluate(root);
    } catch (const Error&) {
      continue;
    }
    if (p.magnitude > kRootAcceptance) continue;
    if (std::abs(p.off_axis) > kOffAxisTolerance) {
      result.warnings.push_back("root near E = " + std::to_string(root) +
                                " has a non-real residual; skipped");
      continue;
    }
    if (!result.energies.empty() && root <= result.energies.back()) continue;
    result.energies.push_back(root);
    result.residuals.push_back(p.magnitude);
  }

  // Two roots inside one scan interval produce no sign change. A dip of |F|
  // towards zero between samples is the visible symptom.
  for (std::size_t i = 1; i + 1 < scan_points; ++i) {
    const double l = values[i - 1], m = values[i], r = values[i + 1];
    if (std::isnan(l) || std::isnan(m) || std::isnan(r)) continue;
    const bool same_sign = (l < 0.0) == (m < 0.0) && (m < 0.0) == (r < 0.0);
    if (same_sign && std::abs(m) < 0.05 * std::min(std::abs(l), std::abs(r))) {
      result.warnings.push_back("possible unresolved near-degenerate pair near E = " +
                                std::to_string(energies[i]) + "; increase scan points");
    }
  }
  const double step = grid.spacing();
  for (std::size_t k = 1; k < result.energies.size(); ++k) {
    if (result.energies[k] - result.energies[k - 1] < 2.0 * step) {
      result.warnings.push_back("roots at E = " + std::to_string(result.energies[k - 1]) +
                                " and " + std::to_string(result.energies[k]) +
                                " are within two scan steps; a finer scan is advised");
    }
  }
  return result;
}

}  // namespace qwi
