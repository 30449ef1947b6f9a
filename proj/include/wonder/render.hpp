#pragma once

#include <string>

#include "wonder/system.hpp"

namespace wonder {

/// Annotated-text rendering of the system: one diagram per factor (branch
/// nodes of D/E types drawn above the chain), then one line per root with
/// its parabolic flag, the spherical roots supported on it, and its colors.
std::string render_system(const SphericalSystem& sys);

}  // namespace wonder
