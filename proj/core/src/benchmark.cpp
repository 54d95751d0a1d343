#include "qwi/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "qwi/analytical_engine.hpp"
#include "qwi/iterative_engine.hpp"

namespace qwi {
namespace {

using Clock = std::chrono::steady_clock;

/// Wall time per call over one batch that lasts at least `min_seconds`.
template <class Eval>
double batch_seconds_per_call(Eval&& eval, double min_seconds, double& sink) {
  std::size_t calls = 0;
  const auto start = Clock::now();
  double elapsed = 0.0;
  do {
    sink += eval();
    ++calls;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < min_seconds);
  return elapsed / static_cast<double>(calls);
}

double median(std::vector<double> samples) {
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

}  // namespace

PotentialProfile benchmark_profile(std::size_t regions, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> potential(-10.0, 10.0);
  std::uniform_real_distribution<double> width(0.05, 3.0);
  std::vector<Region> r(regions);
  for (Region& region : r) region = {potential(rng), width(rng)};
  return PotentialProfile(0.0, std::move(r), 0.0);
}

std::vector<BenchmarkRow> run_benchmark(std::span<const std::size_t> sizes,
                                        const BenchmarkOptions& options, const UnitSystem& units) {
  std::vector<PotentialProfile> profiles;
  for (std::size_t n : sizes) profiles.push_back(benchmark_profile(n, options.seed));

  // Repetitions are interleaved across sizes so that drifting machine load
  // spreads over every row instead of distorting a few.
  const std::size_t repetitions = std::max<std::size_t>(options.repetitions, 1);
  std::vector<std::vector<double>> iterative(sizes.size()), analytical(sizes.size());
  double sink = 0.0;
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const PotentialProfile& profile = profiles[i];
      iterative[i].push_back(batch_seconds_per_call(
          [&] { return input_impedance_iterative(profile, options.energy, units).value.real(); },
          options.min_batch_seconds, sink));
      if (sizes[i] <= kMaxAnalyticalRegions) {
        analytical[i].push_back(batch_seconds_per_call(
            [&] { return input_impedance_analytical(profile, options.energy, units).value.real(); },
            options.min_batch_seconds, sink));
      }
    }
  }
  // Keeps the evaluations observable.
  if (sink == 0.123456789) iterative.front().push_back(0.0);

  std::vector<BenchmarkRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    BenchmarkRow row;
    row.regions = sizes[i];
    row.iterative_seconds = median(iterative[i]);
    if (!analytical[i].empty()) row.analytical_seconds = median(analytical[i]);
    rows.push_back(row);
  }
  return rows;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace qwi
