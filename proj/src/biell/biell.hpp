#pragma once

// Umbrella header for the lattice core.

#include "biell/delta.hpp"     // IWYU pragma: export
#include "biell/errors.hpp"    // IWYU pragma: export
#include "biell/factor.hpp"    // IWYU pragma: export
#include "biell/int.hpp"       // IWYU pragma: export
#include "biell/isometry.hpp"  // IWYU pragma: export
#include "biell/lattice.hpp"   // IWYU pragma: export
#include "biell/literals.hpp"  // IWYU pragma: export
#include "biell/surface.hpp"   // IWYU pragma: export
