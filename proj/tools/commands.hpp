#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qwi::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitComputationError = 3;

/// Runs the command line (program name excluded) and returns the exit code.
/// Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, '.' separator: round-trips every double.
std::string format_number(double value);

/// "1,2,4", "8..14" or a mix such as "1,4..6".
std::vector<std::size_t> parse_size_list(std::string_view text);

/// out.csv -> out.resonances.json; other names get the suffix appended.
std::string resonance_sidecar_path(const std::string& csv_path);

}  // namespace qwi::cli
