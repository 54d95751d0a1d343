#include "profile_file.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qwi::cli {
namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

class Diagnostics {
 public:
  explicit Diagnostics(std::string_view source) : source_(source) {}
  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ProfileFileError(source_ + ":" + std::to_string(line) + ": " + message);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ProfileFileError(source_ + ": " + message);
  }

 private:
  std::string source_;
};

double parse_number(const std::string& text, std::size_t line, const Diagnostics& diag,
                    std::string_view what) {
  std::istringstream in(text);
  double value = 0.0;
  std::string rest;
  if (!(in >> value) || (in >> rest) || !std::isfinite(value)) {
    diag.fail(line, "expected a number for " + std::string(what) + ", got '" + text + "'");
  }
  return value;
}

}  // namespace

ProfileFile parse_profile(std::istream& in, std::string_view source) {
  const Diagnostics diag(source);
  std::optional<std::string> units;
  std::optional<double> mass_ratio, left, right;
  std::vector<Region> regions;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;

    if (text.rfind("region", 0) == 0 && (text.size() == 6 || text[6] == ' ' || text[6] == '\t')) {
      std::istringstream fields(text.substr(6));
      std::string v, l, extra;
      if (!(fields >> v >> l) || (fields >> extra)) {
        diag.fail(line, "region needs exactly two values: potential width");
      }
      const double potential = parse_number(v, line, diag, "region potential");
      const double width = parse_number(l, line, diag, "region width");
      if (width <= 0.0) diag.fail(line, "region width must be positive, got " + l);
      regions.push_back({potential, width});
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) diag.fail(line, "expected 'key = value' or 'region V l'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (value.empty()) diag.fail(line, "missing value for '" + key + "'");

    const auto once = [&](const auto& slot) {
      if (slot) diag.fail(line, "duplicate key '" + key + "'");
    };
    if (key == "units") {
      once(units);
      if (value != "natural" && value != "nm-ev") {
        diag.fail(line, "units must be 'natural' or 'nm-ev', got '" + value + "'");
      }
      units = value;
    } else if (key == "mass_ratio") {
      once(mass_ratio);
      mass_ratio = parse_number(value, line, diag, key);
      if (*mass_ratio <= 0.0) diag.fail(line, "mass_ratio must be positive");
    } else if (key == "left_lead") {
      once(left);
      left = parse_number(value, line, diag, key);
    } else if (key == "right_lead") {
      once(right);
      right = parse_number(value, line, diag, key);
    } else {
      diag.fail(line, "unknown key '" + key + "'");
    }
  }

  if (!units) diag.fail("missing required key 'units'");
  if (!left) diag.fail("missing required key 'left_lead'");
  if (!right) diag.fail("missing required key 'right_lead'");
  if (mass_ratio && *units == "natural") diag.fail("mass_ratio only applies to nm-ev units");

  ProfileFile file;
  file.units = *units == "natural" ? UnitSystem::natural()
                                   : UnitSystem::nanometer_electron_volt(mass_ratio.value_or(1.0));
  file.profile = PotentialProfile::from_left_to_right(*left, std::move(regions), *right);
  return file;
}

ProfileFile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProfileFileError(path + ": cannot open profile file");
  return parse_profile(in, path);
}

}  // namespace qwi::cli
