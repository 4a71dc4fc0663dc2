#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracrs/errors.hpp"
#include "fracrs/irs_decoder.hpp"
#include "fracrs/polynomials.hpp"
#include "fracrs/projection.hpp"

namespace fracrs {

/// Peel the component polynomials h_0..h_{l-1} out of the m row polynomials
/// using the annihilator structure: for u = 0..l-m-1, h_u is interpolated
/// from the values of the peeled rows on the sets A_j (where every higher
/// term vanishes), then divided out; the final T_j residue is h_{l-m+j}.
/// Degree and divisibility violations signal residual errors and fail with
/// degree_bound / inexact_division.
Outcome<std::vector<FPoly>> recover_components(const ProjectionMap& map,
                                               std::span<const FPoly> row_polys);

/// h(x) = sum_i nu_i h_i(x), lifting base-field components through the dual
/// basis. Requires exactly l components.
XPoly reassemble(const ExtFieldCtx& ext, std::span<const FPoly> components);

struct DecodeOptions {
  /// Re-encode and re-project the recovered message and require exact
  /// equality with the corrected rows; converts residual miscorrections
  /// into detected failures. On by default.
  bool self_check = true;
};

struct RecoveredMessage {
  XPoly message;
  std::vector<FPoly> components;
  std::size_t t = 0;  // corrected column errors
};

/// The fractional decoding pipeline: collaborative_decode, per-row
/// interpolation with degree checks, component recovery, reassembly, and the
/// optional projection self-check.
Outcome<RecoveredMessage> fractional_decode(const SchemePtr& scheme, const ProjectedWord& Y,
                                            const DecodeOptions& opts = {});

}  // namespace fracrs
