#pragma once

// Independent closed forms and real-arithmetic shooting used as test oracles.
// Nothing here calls into the impedance engines.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "qwi/profile.hpp"

namespace qwi::testing {

/// Rectangular barrier of height v and width l between zero-potential leads,
/// natural units (hbar = 1, 2m = 1). Covers E < v and E > v.
inline double single_barrier_transmission(double v, double l, double e) {
  if (e < v) {
    const double kappa = std::sqrt(v - e);
    const double s = std::sinh(kappa * l);
    return 1.0 / (1.0 + v * v * s * s / (4.0 * e * (v - e)));
  }
  const double k = std::sqrt(e - v);
  const double s = std::sin(k * l);
  return 1.0 / (1.0 + v * v * s * s / (4.0 * e * (e - v)));
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Levels of a square well of the given depth and width between zero leads,
/// natural units, from the even/odd transcendental equations
///   even: k tan(k a/2) = kappa,  odd: -k cot(k a/2) = kappa.
inline std::vector<double> finite_well_levels(double depth, double width) {
  const double pi = std::numbers::pi;
  const double theta0 = std::sqrt(depth) * width / 2.0;
  std::vector<double> levels;
  for (int n = 0; n * pi / 2.0 < theta0; ++n) {
    const double lo = n * pi / 2.0 + 1e-14;
    const double hi = std::min((n + 1) * pi / 2.0 - 1e-14, theta0);
    const auto f = [&](double t) {
      const double rhs = std::sqrt(std::max(theta0 * theta0 - t * t, 0.0));
      return (n % 2 == 0 ? t * std::tan(t) : -t / std::tan(t)) - rhs;
    };
    if ((f(lo) < 0.0) == (f(hi) < 0.0)) continue;
    const double theta = bisect(f, lo, hi);
    const double k = 2.0 * theta / width;
    levels.push_back(k * k - depth);
  }
  return levels;
}

/// Real shooting function for bound states in natural units: start from the
/// decaying wave exp(-kappa_R x) in the right lead, integrate the exact
/// piecewise solution leftwards and return psi' - kappa_L psi at the left
/// edge, which vanishes exactly at bound-state energies. Pole-free.
inline double shooting_mismatch(const PotentialProfile& p, double e) {
  const double kappa_right = std::sqrt(p.right_lead_potential() - e);
  const double kappa_left = std::sqrt(p.left_lead_potential() - e);
  double psi = 1.0;
  double dpsi = -kappa_right;
  double norm = 1.0;
  for (const Region& r : p.regions()) {  // load side first = right to left
    const double q = r.potential - e;
    const double l = r.width;
    double np, nd;
    if (q > 0) {
      const double kap = std::sqrt(q);
      // psi(x - l) from psi(x), psi'(x)
      np = psi * std::cosh(kap * l) - dpsi * std::sinh(kap * l) / kap;
      nd = -psi * kap * std::sinh(kap * l) + dpsi * std::cosh(kap * l);
    } else if (q < 0) {
      const double k = std::sqrt(-q);
      np = psi * std::cos(k * l) - dpsi * std::sin(k * l) / k;
      nd = psi * k * std::sin(k * l) + dpsi * std::cos(k * l);
    } else {
      np = psi - dpsi * l;
      nd = dpsi;
    }
    norm = std::max(std::abs(np), std::abs(nd));
    psi = np / norm;
    dpsi = nd / norm;
  }
  return dpsi - kappa_left * psi;
}

/// Roots of shooting_mismatch on a dense grid, refined by bisection.
inline std::vector<double> shooting_levels(const PotentialProfile& p, double e_min, double e_max,
                                           std::size_t points) {
  std::vector<double> roots;
  const auto f = [&](double e) { return shooting_mismatch(p, e); };
  double prev_e = e_min, prev_f = f(e_min);
  for (std::size_t i = 1; i < points; ++i) {
    const double e = e_min + (e_max - e_min) * static_cast<double>(i) / (points - 1);
    const double fe = f(e);
    if ((fe < 0.0) != (prev_f < 0.0)) roots.push_back(bisect(f, prev_e, e));
    prev_e = e;
    prev_f = fe;
  }
  return roots;
}

}  // namespace qwi::testing
