#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "profile_file.hpp"
#include "qwi/analytical_engine.hpp"
#include "qwi/benchmark.hpp"
#include "qwi/errors.hpp"
#include "qwi/iterative_engine.hpp"
#include "qwi/spectrum.hpp"

namespace qwi::cli {
namespace {

using nlohmann::json;

/// Bad user input that is not a profile-file problem (energy window, sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

struct CommonOptions {
  std::string profile_path;
  std::string units;  // empty: take from the profile file
  std::string output;
};

ProfileFile load_with_units(const CommonOptions& common) {
  ProfileFile file = load_profile(common.profile_path);
  if (common.units == "natural") {
    file.units = UnitSystem::natural();
  } else if (common.units == "nm-ev" && file.units.mode() != UnitMode::NanoElectronVolt) {
    file.units = UnitSystem::nanometer_electron_volt(1.0);
  }
  return file;
}

Engine parse_engine(const std::string& name) {
  return name == "iterative" ? Engine::Iterative : Engine::Analytical;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path + ": cannot open output file");
  return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out = open_output(path);
  out << text;
}

double max_lead(const PotentialProfile& p) {
  return std::max(p.left_lead_potential(), p.right_lead_potential());
}

double min_lead(const PotentialProfile& p) {
  return std::min(p.left_lead_potential(), p.right_lead_potential());
}

// ---------------------------------------------------------------------------

struct TransmissionOptions {
  CommonOptions common;
  double start = 0.0;
  double stop = 0.0;
  std::size_t samples = 1000;
  std::string engine = "analytical";
};

int cmd_transmission(const TransmissionOptions& o, std::ostream& out, std::ostream& err) {
  const ProfileFile file = load_with_units(o.common);
  const EnergyGrid grid{o.start, o.stop, o.samples};
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (grid.start < max_lead(file.profile)) {
    throw InputError("energy window starts at " + format_number(grid.start) +
                     ", below the lead potential " + format_number(max_lead(file.profile)) +
                     "; transmission needs propagating leads");
  }

  const Spectrum s = sweep_transmission(file.profile, grid, parse_engine(o.engine), file.units);
  if (s.gaps.size() == grid.samples) {
    err << "error: every sample failed: " << s.gaps.front().reason << '\n';
    return kExitComputationError;
  }

  std::string csv = "energy,transmission\n";
  for (std::size_t i = 0; i < s.energies.size(); ++i) {
    csv += format_number(s.energies[i]) + ',' + format_number(s.transmission[i]) + '\n';
  }

  json sidecar;
  sidecar["units"] = std::string(file.units.name());
  sidecar["engine"] = o.engine;
  sidecar["resonances"] = json::array();
  for (const Resonance& r : s.resonances) {
    json entry{{"energy", r.energy}, {"transmission", r.transmission}};
    entry["fwhm"] = std::isnan(r.fwhm) ? json(nullptr) : json(r.fwhm);
    sidecar["resonances"].push_back(entry);
  }
  sidecar["gaps"] = json::array();
  for (const SweepGap& g : s.gaps) {
    sidecar["gaps"].push_back({{"energy", s.energies[g.index]}, {"reason", g.reason}});
  }

  if (o.common.output.empty()) {
    out << csv;
    err << sidecar.dump(2) << '\n';
  } else {
    write_text(o.common.output, csv, out);
    write_text(resonance_sidecar_path(o.common.output), sidecar.dump(2) + "\n", out);
  }
  err << "transmission: " << grid.samples << " samples, " << s.resonances.size()
      << " resonances, " << s.gaps.size() << " gaps (units: " << file.units.name() << ")\n";
  return kExitSuccess;
}

// ---------------------------------------------------------------------------

struct BoundStateOptions {
  CommonOptions common;
  std::optional<double> e_min;
  std::optional<double> e_max;
  std::size_t scan_points = 4000;
};

int cmd_bound_states(const BoundStateOptions& o, std::ostream& out, std::ostream& err) {
  const ProfileFile file = load_with_units(o.common);
  const double lead = min_lead(file.profile);
  const double e_max = o.e_max.value_or(lead - 1e-9 * std::max(1.0, std::abs(lead)));
  const double e_min = o.e_min.value_or(file.profile.min_potential() + 1e-9);
  if (e_max >= lead) {
    throw InputError("bound-state window must lie below both lead potentials (max " +
                     format_number(e_max) + " >= " + format_number(lead) + ")");
  }

  json doc;
  doc["units"] = std::string(file.units.name());
  doc["energies"] = json::array();
  doc["residuals"] = json::array();
  doc["warnings"] = json::array();
  if (e_min < e_max) {
    BoundStateSet found;
    try {
      found = find_bound_states(file.profile, e_min, e_max, o.scan_points, file.units);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    doc["energies"] = found.energies;
    doc["residuals"] = found.residuals;
    doc["warnings"] = found.warnings;
    for (const std::string& w : found.warnings) err << "warning: " << w << '\n';
  }
  // e_min >= e_max by default means nothing lies below the leads: no states.
  write_text(o.common.output, doc.dump(2) + "\n", out);
  err << "bound-states: " << doc["energies"].size() << " found (units: " << file.units.name()
      << ")\n";
  return kExitSuccess;
}

// ---------------------------------------------------------------------------

struct ImpedanceOptions {
  CommonOptions common;
  std::vector<double> energies;
  std::optional<double> start;
  std::optional<double> stop;
  std::size_t samples = 100;
  std::string engine = "analytical";
};

int cmd_impedance(const ImpedanceOptions& o, std::ostream& out, std::ostream& err) {
  const ProfileFile file = load_with_units(o.common);
  std::vector<double> energies = o.energies;
  if (o.start || o.stop) {
    if (!o.start || !o.stop) throw InputError("--start and --stop go together");
    const EnergyGrid grid{*o.start, *o.stop, o.samples};
    try {
      grid.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const std::vector<double> points = grid.points();
    energies.insert(energies.end(), points.begin(), points.end());
  }
  if (energies.empty()) throw InputError("give --energy or --start/--stop");

  const Engine engine = parse_engine(o.engine);
  std::string csv = "energy,impedance_re,impedance_im\n";
  std::size_t failures = 0;
  for (double e : energies) {
    cplx z{NAN, NAN};
    try {
      z = (engine == Engine::Analytical ? input_impedance_analytical(file.profile, e, file.units)
                                        : input_impedance_iterative(file.profile, e, file.units))
              .value;
    } catch (const Error& ex) {
      ++failures;
      err << "warning: E = " << format_number(e) << ": " << ex.what() << '\n';
    }
    csv += format_number(e) + ',' + format_number(z.real()) + ',' + format_number(z.imag()) + '\n';
  }
  write_text(o.common.output, csv, out);
  err << "impedance: " << energies.size() << " energies (units: " << file.units.name()
      << ", velocity " << (file.units.mode() == UnitMode::Natural ? "natural" : "m/s") << ")\n";
  return failures == 0 ? kExitSuccess : kExitComputationError;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string sizes = "1,2,4,8,12,16";
  std::size_t repetitions = 5;
  double min_batch_seconds = 2e-3;
  std::string units = "natural";
};

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", s);
  return buf;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream&) {
  const std::vector<std::size_t> sizes = parse_size_list(o.sizes);
  const UnitSystem units =
      o.units == "nm-ev" ? UnitSystem::nanometer_electron_volt(1.0) : UnitSystem::natural();
  BenchmarkOptions options;
  options.repetitions = o.repetitions;
  options.min_batch_seconds = o.min_batch_seconds;
  const std::vector<BenchmarkRow> rows = run_benchmark(sizes, options, units);

  char line[160];
  std::snprintf(line, sizeof line, "%6s  %16s  %16s  %14s\n", "N", "iterative_s", "analytical_s",
                "ratio");
  out << line;
  for (const BenchmarkRow& row : rows) {
    const std::string analytical =
        row.analytical_seconds ? format_seconds(*row.analytical_seconds) : "skipped";
    const std::string ratio = row.ratio() ? format_seconds(*row.ratio()) : "skipped";
    std::snprintf(line, sizeof line, "%6zu  %16s  %16s  %14s\n", row.regions,
                  format_seconds(row.iterative_seconds).c_str(), analytical.c_str(), ratio.c_str());
    out << line;
  }
  return kExitSuccess;
}

void add_common(CLI::App& cmd, CommonOptions& common) {
  cmd.add_option("profile", common.profile_path, "Profile file")->required();
  cmd.add_option("--units", common.units, "Override the profile's unit system")
      ->check(CLI::IsMember({"natural", "nm-ev"}));
  cmd.add_option("-o,--output", common.output, "Output file (default: stdout)");
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> sizes;
  const auto parse_one = [](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (s.empty() || pos != s.size() || s.front() == '-') {
      throw InputError("bad size '" + s + "' in size list");
    }
    return static_cast<std::size_t>(v);
  };
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      sizes.push_back(parse_one(item));
      continue;
    }
    const std::size_t lo = parse_one(item.substr(0, dots));
    const std::size_t hi = parse_one(item.substr(dots + 2));
    if (hi < lo) throw InputError("empty range '" + item + "'");
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
  }
  if (sizes.empty()) throw InputError("empty size list");
  return sizes;
}

std::string resonance_sidecar_path(const std::string& csv_path) {
  const std::string ext = ".csv";
  if (csv_path.size() > ext.size() && csv_path.ends_with(ext)) {
    return csv_path.substr(0, csv_path.size() - ext.size()) + ".resonances.json";
  }
  return csv_path + ".resonances.json";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum wave impedance solver for piecewise-constant 1-D potentials", "qwi"};
  app.require_subcommand(1);

  TransmissionOptions transmission_opts;
  CLI::App* transmission = app.add_subcommand("transmission", "Sweep T(E) and locate resonances");
  add_common(*transmission, transmission_opts.common);
  transmission->add_option("--start", transmission_opts.start, "First energy")->required();
  transmission->add_option("--stop", transmission_opts.stop, "Last energy")->required();
  transmission->add_option("--samples", transmission_opts.samples, "Grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  transmission->add_option("--engine", transmission_opts.engine)
      ->check(CLI::IsMember({"analytical", "iterative"}));

  BoundStateOptions bound_opts;
  CLI::App* bound = app.add_subcommand("bound-states", "Find bound-state energies");
  add_common(*bound, bound_opts.common);
  bound->add_option("--min", bound_opts.e_min, "Lowest energy scanned");
  bound->add_option("--max", bound_opts.e_max, "Highest energy scanned (below both leads)");
  bound->add_option("--scan-points,--samples", bound_opts.scan_points, "Scan grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  ImpedanceOptions impedance_opts;
  CLI::App* impedance = app.add_subcommand("impedance", "Evaluate the input impedance Z(E)");
  add_common(*impedance, impedance_opts.common);
  impedance->add_option("--energy", impedance_opts.energies, "Energy (repeatable)");
  impedance->add_option("--start", impedance_opts.start);
  impedance->add_option("--stop", impedance_opts.stop);
  impedance->add_option("--samples", impedance_opts.samples)
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  impedance->add_option("--engine", impedance_opts.engine)
      ->check(CLI::IsMember({"analytical", "iterative"}));

  BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Time the iterative and analytical engines");
  bench->add_option("--sizes", bench_opts.sizes, "Region counts, e.g. 1,2,4 or 8..14");
  bench->add_option("--repetitions", bench_opts.repetitions)
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  bench->add_option("--min-batch", bench_opts.min_batch_seconds, "Seconds per timing sample")
      ->check(CLI::PositiveNumber);
  bench->add_option("--units", bench_opts.units)->check(CLI::IsMember({"natural", "nm-ev"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (*transmission) return cmd_transmission(transmission_opts, out, err);
    if (*bound) return cmd_bound_states(bound_opts, out, err);
    if (*impedance) return cmd_impedance(impedance_opts, out, err);
    if (*bench) return cmd_bench(bench_opts, out, err);
  } catch (const ProfileFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvalidProfile& e) {
    err << "error: invalid profile: " << e.what() << '\n';
    return kExitInputError;
  } catch (const EvanescentLead& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PropagatingLead& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputationError;
  }
  return kExitInputError;
}

}  // namespace qwi::cli
