#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qwi/profile.hpp"
#include "qwi/units.hpp"

namespace qwi {

struct BenchmarkOptions {
  std::size_t repetitions = 5;
  /// Each timing sample repeats the evaluation until at least this much wall time passes.
  double min_batch_seconds = 2e-3;
  std::uint64_t seed = 42;
  double energy = 0.37;
};

struct BenchmarkRow {
  std::size_t regions = 0;
  double iterative_seconds = 0.0;                // median per evaluation
  std::optional<double> analytical_seconds;      // empty when N > kMaxAnalyticalRegions

  std::optional<double> ratio() const {
    if (!analytical_seconds) return std::nullopt;
    return *analytical_seconds / iterative_seconds;
  }
};

/// Deterministic random cascade used for timing: V in [-10, 10], l in (0, 3].
/// Profiles for one seed are nested: size N is the first N regions of size N + 1.
PotentialProfile benchmark_profile(std::size_t regions, std::uint64_t seed);

/// Median wall time per impedance evaluation of both engines for each size.
/// Runs single-threaded.
std::vector<BenchmarkRow> run_benchmark(std::span<const std::size_t> sizes,
                                        const BenchmarkOptions& options, const UnitSystem& units);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace qwi
