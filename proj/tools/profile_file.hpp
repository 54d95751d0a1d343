#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "qwi/errors.hpp"
#include "qwi/profile.hpp"
#include "qwi/units.hpp"

namespace qwi::cli {

/// Malformed or unreadable profile document. Carries a `source:line:` prefix.
class ProfileFileError : public Error {
 public:
  using Error::Error;
};

/// A parsed profile document.
///
/// Format: one statement per line, `#` starts a comment.
///
///     units = natural          # or nm-ev
///     mass_ratio = 0.067       # optional, nm-ev only (default 1)
///     left_lead = 0
///     right_lead = 0
///     region 5.0 0.5           # potential width, listed left to right
///
/// `units`, `left_lead` and `right_lead` are required; each key may appear once.
struct ProfileFile {
  UnitSystem units = UnitSystem::natural();
  PotentialProfile profile;
};

ProfileFile parse_profile(std::istream& in, std::string_view source = "<input>");
ProfileFile load_profile(const std::string& path);

}  // namespace qwi::cli
