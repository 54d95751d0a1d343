#include <doctest.h>

#include <cmath>
#include <random>

#include "qwi/analytical_engine.hpp"
#include "qwi/double_barrier.hpp"
#include "qwi/spectrum.hpp"
#include "random_profiles.hpp"

using namespace qwi;
using namespace qwi::testing;

namespace {
const UnitSystem kNatural = UnitSystem::natural();
}  // namespace

TEST_CASE("asymmetric form collapses to z on a uniform cascade") {
  const RegionParams m{cplx{0.0, 0.8}, cplx{1.6, 0.0}};
  const Impedance z = double_barrier_impedance({m, m, m, m}, {0.3, 1.2, 0.7});
  CHECK(relative_difference(z.value, m.z) < 1e-15);
}

TEST_CASE("asymmetric form equals the generic engine on random complex cascades") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> width(0.05, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<RegionParams, 4> params;
    for (RegionParams& p : params) p = {random_complex(rng, -1.5, 1.5), random_complex(rng, 0.1, 3)};
    const std::array<double, 3> widths{width(rng), width(rng), width(rng)};
    const Cascade c{params[0],
                    {{params[1], widths[0]}, {params[2], widths[1]}, {params[3], widths[2]}},
                    params[0]};
    CHECK(relative_difference(double_barrier_impedance(params, widths).value,
                              input_impedance_analytical(c).value) < 1e-10);
  }
}

TEST_CASE("zero-width spacer merges matching neighbours into one region") {
  const RegionParams load{cplx{0.0, 1.0}, cplx{2.0, 0.0}};
  const RegionParams barrier{cplx{0.9, 0.0}, cplx{0.0, -1.8}};
  const RegionParams spacer{cplx{0.0, 0.4}, cplx{0.8, 0.0}};
  const Impedance split = double_barrier_impedance({load, barrier, spacer, barrier}, {0.3, 0.0, 0.5});
  const Cascade merged{load, {{barrier, 0.8}}, load};
  CHECK(relative_difference(split.value, input_impedance_analytical(merged).value) < 1e-12);
}

TEST_CASE("symmetric form with matched barrier returns the barrier impedance") {
  const RegionParams m{cplx{0.0, 1.1}, cplx{2.2, 0.0}};
  const Impedance z = symmetric_double_barrier_impedance(m, m, 0.6, 1.7);
  CHECK(relative_difference(z.value, m.z) < 1e-14);
}

TEST_CASE("symmetric form equals asymmetric and generic forms") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> width(0.05, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const RegionParams outer{random_complex(rng, -1.5, 1.5), random_complex(rng, 0.1, 3)};
    const RegionParams barrier{random_complex(rng, -1.5, 1.5), random_complex(rng, 0.1, 3)};
    const double l1 = width(rng), l2 = width(rng);
    const cplx sym = symmetric_double_barrier_impedance(outer, barrier, l1, l2).value;
    const cplx asym = double_barrier_impedance({outer, barrier, outer, barrier}, {l1, l2, l1}).value;
    CHECK(relative_difference(sym, asym) < 1e-10);
  }
}

TEST_CASE("physical symmetric specs agree with the generic engine at random energies") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> potential(-10.0, 10.0);
  std::uniform_real_distribution<double> width(0.05, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const SymmetricDoubleBarrier spec{potential(rng), potential(rng), width(rng), width(rng)};
    const double e = random_energy(rng, spec.profile(), -12.0, 15.0);
    const cplx generic = input_impedance_analytical(spec.profile(), e, kNatural).value;
    CHECK(relative_difference(impedance_symmetric(spec, e, kNatural).value, generic) < 1e-10);

    const AsymmetricDoubleBarrier a{potential(rng),
                                    {Region{potential(rng), width(rng)}, Region{potential(rng), width(rng)},
                                     Region{potential(rng), width(rng)}},
                                    potential(rng)};
    const double ea = random_energy(rng, a.profile(), -12.0, 15.0);
    CHECK(relative_difference(impedance_asymmetric(a, ea, kNatural).value,
                              input_impedance_analytical(a.profile(), ea, kNatural).value) < 1e-10);
  }
}

TEST_CASE("symmetric resonance is impedance matched") {
  const SymmetricDoubleBarrier spec{0.0, 5.0, 0.5, 2.0};
  const Spectrum s = sweep_transmission(spec.profile(), {0.05, 4.95, 400}, Engine::Analytical, kNatural);
  REQUIRE(!s.resonances.empty());
  for (const Resonance& r : s.resonances) {
    const Impedance z = impedance_symmetric(spec, r.energy, kNatural);
    const cplx z_lead = 2.0 * std::sqrt(r.energy);
    CHECK(std::abs(reflection_amplitude(z, z_lead)) < 1e-6);
  }
}
