#pragma once

// Umbrella header: the full public surface of the library.

#include "fracrs/errors.hpp"
#include "fracrs/fields.hpp"
#include "fracrs/irs_decoder.hpp"
#include "fracrs/polynomials.hpp"
#include "fracrs/projection.hpp"
#include "fracrs/radii.hpp"
#include "fracrs/recovery.hpp"
#include "fracrs/rng.hpp"
#include "fracrs/rs.hpp"
#include "fracrs/serialize.hpp"
#include "fracrs/simulate.hpp"
#include "fracrs/stats.hpp"
