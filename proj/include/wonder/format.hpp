#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wonder/system.hpp"

namespace wonder {

struct format_error : std::runtime_error {
  int line;
  format_error(int l, const std::string& what)
      : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}
};

/// Plain-text system document:
///
///   group: B4
///   sp: 3            # comma-separated 1-based indices, or "-" for empty
///   sigma:
///     1 0 0 0
///   A:
///     D1: 1
///     D2: 1
///
/// '#' starts a comment, blank lines are ignored. parse(emit(sys)) == sys.
std::string emit_system(const SphericalSystem& sys);
SphericalSystem parse_system(std::string_view text);

}  // namespace wonder
