#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "qwi/double_barrier.hpp"
#include "qwi/errors.hpp"
#include "qwi/spectrum.hpp"
#include "qwi/transfer_matrix_oracle.hpp"

using namespace qwi;
using namespace qwi::testing;

namespace {
const UnitSystem kNatural = UnitSystem::natural();
}  // namespace

TEST_CASE("energy grid") {
  const EnergyGrid g{1.0, 2.0, 5};
  CHECK(g.points() == std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0});
  CHECK_THROWS_AS((EnergyGrid{2.0, 1.0, 5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((EnergyGrid{1.0, 2.0, 1}.validate()), std::invalid_argument);
}

TEST_CASE("flat potential: all ones, no resonances") {
  const PotentialProfile flat(0.0, {{0.0, 1.0}, {0.0, 1.0}}, 0.0);
  for (Engine engine : {Engine::Analytical, Engine::Iterative}) {
    const Spectrum s = sweep_transmission(flat, {0.1, 5.0, 50}, engine, kNatural);
    CHECK(s.gaps.empty());
    CHECK(s.resonances.empty());
    for (double t : s.transmission) CHECK(t == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("symmetric double barrier resonances below the barrier top") {
  const SymmetricDoubleBarrier spec{0.0, 5.0, 0.5, 2.0};
  const PotentialProfile p = spec.profile();
  const Spectrum s = sweep_transmission(p, {0.01, 4.99, 500}, Engine::Analytical, kNatural);
  REQUIRE(!s.resonances.empty());
  for (std::size_t k = 0; k < s.resonances.size(); ++k) {
    const Resonance& r = s.resonances[k];
    CHECK(r.energy < 5.0);
    CHECK(r.transmission >= 1.0 - 1e-4);
    CHECK(oracle::oracle_transmission(p, r.energy, kNatural) >= 1.0 - 1e-6);
    if (k > 0) CHECK(r.energy > s.resonances[k - 1].energy);
  }
  // Oracle sweep at 10x resolution has its maxima next to the refined peaks.
  const EnergyGrid fine{0.01, 4.99, 5000};
  std::vector<double> t(fine.samples);
  for (std::size_t i = 0; i < fine.samples; ++i) t[i] = oracle::oracle_transmission(p, fine.at(i), kNatural);
  std::size_t oracle_peaks = 0;
  for (std::size_t i = 1; i + 1 < fine.samples; ++i) {
    if (t[i] > t[i - 1] && t[i] >= t[i + 1] && t[i] > 0.5) {
      ++oracle_peaks;
      bool matched = false;
      for (const Resonance& r : s.resonances) matched |= std::abs(r.energy - fine.at(i)) <= fine.spacing();
      CHECK(matched);
    }
  }
  CHECK(oracle_peaks == s.resonances.size());
}

TEST_CASE("resonances dominate their flanking samples and have a width") {
  const SymmetricDoubleBarrier spec{0.0, 5.0, 0.5, 2.0};
  const Spectrum s = sweep_transmission(spec.profile(), {0.01, 4.99, 500}, Engine::Iterative, kNatural);
  const double step = (4.99 - 0.01) / 499.0;
  for (const Resonance& r : s.resonances) {
    const auto i = static_cast<std::size_t>(std::llround((r.energy - 0.01) / step));
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = std::min<std::size_t>(i + 1, s.energies.size() - 1);
    CHECK(r.transmission >= s.transmission[lo]);
    CHECK(r.transmission >= s.transmission[hi]);
    // NaN when the half maximum is not crossed inside the grid.
    CHECK((std::isnan(r.fwhm) || r.fwhm > 0.0));
  }
  REQUIRE(!s.resonances.empty());
  CHECK(s.resonances.front().fwhm > 0.0);
  CHECK(s.resonances.front().fwhm < 1.0);
}

TEST_CASE("engines give the same spectrum") {
  const PotentialProfile p = PotentialProfile::from_left_to_right(
      0.0, {{3.0, 0.4}, {-1.0, 1.0}, {4.0, 0.3}, {0.5, 1.5}, {2.0, 0.6}, {-0.5, 0.8}, {3.5, 0.2},
            {1.0, 1.1}, {0.0, 0.9}, {2.5, 0.5}, {-2.0, 0.4}, {1.5, 0.7}},
      0.0);
  const EnergyGrid grid{0.01, 8.0, 300};
  const Spectrum a = sweep_transmission(p, grid, Engine::Analytical, kNatural);
  const Spectrum b = sweep_transmission(p, grid, Engine::Iterative, kNatural);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.samples; ++i) {
    worst = std::max(worst, std::abs(a.transmission[i] - b.transmission[i]));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("sweep records gaps instead of aborting") {
  const PotentialProfile step(0.0, {{2.0, 1.0}}, 1.0);
  const Spectrum s = sweep_transmission(step, {0.0, 2.0, 21}, Engine::Analytical, kNatural);
  CHECK(!s.gaps.empty());
  CHECK(std::isnan(s.transmission.front()));
  CHECK(std::isfinite(s.transmission.back()));
}

TEST_CASE("sweeps are deterministic") {
  const SymmetricDoubleBarrier spec{0.0, 5.0, 0.5, 2.0};
  const Spectrum a = sweep_transmission(spec.profile(), {0.01, 4.99, 200}, Engine::Analytical, kNatural);
  const Spectrum b = sweep_transmission(spec.profile(), {0.01, 4.99, 200}, Engine::Analytical, kNatural);
  CHECK(a.transmission == b.transmission);
  REQUIRE(a.resonances.size() == b.resonances.size());
  for (std::size_t i = 0; i < a.resonances.size(); ++i) {
    CHECK(a.resonances[i].energy == b.resonances[i].energy);
  }
}

TEST_CASE("finite well levels match the transcendental equations") {
  const PotentialProfile well(0.0, {{-10.0, 2.0}}, 0.0);
  const std::vector<double> expected = finite_well_levels(10.0, 2.0);
  // Independently frozen at 30 digits.
  REQUIRE(expected.size() == 3);
  CHECK(expected[0] == doctest::Approx(-8.5927852752298389).epsilon(1e-12));
  CHECK(expected[1] == doctest::Approx(-4.6241940863297795).epsilon(1e-12));
  CHECK(expected[2] == doctest::Approx(-0.0040192624533293).epsilon(1e-9));

  const BoundStateSet found = find_bound_states(well, -9.999, -1e-9, 2000, kNatural);
  REQUIRE(found.energies.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(std::abs(found.energies[i] - expected[i]) < 1e-6);
    CHECK(found.residuals[i] <= 1e-9);
  }
}

TEST_CASE("bound states are stable under grid refinement") {
  const PotentialProfile p = PotentialProfile::from_left_to_right(
      0.0, {{-6.0, 1.0}, {-2.0, 0.5}, {-8.0, 0.8}}, 0.5);
  const BoundStateSet coarse = find_bound_states(p, -7.999, -1e-6, 800, kNatural);
  const BoundStateSet fine = find_bound_states(p, -7.999, -1e-6, 1600, kNatural);
  REQUIRE(coarse.energies.size() == fine.energies.size());
  REQUIRE(!coarse.energies.empty());
  for (std::size_t i = 0; i < coarse.energies.size(); ++i) {
    CHECK(std::abs(coarse.energies[i] - fine.energies[i]) < 1e-9);
  }
  const std::vector<double> oracle = shooting_levels(p, -7.999, -1e-6, 20000);
  REQUIRE(oracle.size() == fine.energies.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(std::abs(oracle[i] - fine.energies[i]) < 1e-9);
}

TEST_CASE("attractive wells always bind") {
  for (double depth : {0.05, 0.5, 3.0}) {
    for (double width : {0.1, 1.0}) {
      const PotentialProfile well(0.0, {{-depth, width}}, 0.0);
      const BoundStateSet found = find_bound_states(well, -depth + 1e-9, -1e-12, 4000, kNatural);
      CHECK(found.energies.size() >= 1);
    }
  }
}

TEST_CASE("double well: split pairs, splitting shrinks with the central barrier") {
  double previous_split = INFINITY;
  for (double barrier : {0.2, 0.5, 1.0}) {
    const PotentialProfile p =
        PotentialProfile::from_left_to_right(0.0, {{-10.0, 1.0}, {0.0, barrier}, {-10.0, 1.0}}, 0.0);
    const BoundStateSet found = find_bound_states(p, -9.999, -1e-9, 4000, kNatural);
    const std::vector<double> oracle = shooting_levels(p, -9.999, -1e-9, 40000);
    REQUIRE(found.energies.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(std::abs(found.energies[i] - oracle[i]) < 1e-9);
    // The isolated ground level splits into a pair that straddles it.
    const double isolated = finite_well_levels(10.0, 1.0).front();
    REQUIRE(found.energies.size() >= 2);
    CHECK(found.energies[0] < isolated);
    CHECK(found.energies[1] > isolated);
    const double split = found.energies[1] - found.energies[0];
    CHECK(split < previous_split);
    previous_split = split;
  }
}

TEST_CASE("repulsive profile has no bound states") {
  const PotentialProfile barrier(0.0, {{2.0, 1.0}}, 0.0);
  const BoundStateSet found = find_bound_states(barrier, -5.0, -1e-6, 500, kNatural);
  CHECK(found.energies.empty());
}

TEST_CASE("bound-state window above a lead is rejected") {
  const PotentialProfile well(0.0, {{-3.0, 1.0}}, 0.0);
  CHECK_THROWS_AS(find_bound_states(well, -2.0, 0.5, 100, kNatural), PropagatingLead);
  CHECK_THROWS_AS(find_bound_states(well, -1.0, -2.0, 100, kNatural), std::invalid_argument);
}
