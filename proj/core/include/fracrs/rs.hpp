#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fracrs/fields.hpp"
#include "fracrs/polynomials.hpp"

namespace fracrs {

class CodeSpec;
using CodeSpecPtr = std::shared_ptr<const CodeSpec>;

/// An [n, k] Reed-Solomon code over F_{q^l} whose evaluation points are
/// distinct nonzero elements of the base field F_q. Besides encoding, it
/// carries the generalized-RS dual multipliers u_h = prod_{h' != h}
/// (alpha_h - alpha_{h'})^{-1}, which make sum_h c_h u_h alpha_h^{i-1}
/// vanish for 1 <= i <= n - k' whenever (c_h) evaluates a polynomial of
/// degree < k' on the points. That is the property row-syndrome
/// computation relies on.
class CodeSpec {
 public:
  /// L (optional) lists the evaluation points as base-field element
  /// indices; defaults to the first n nonzero elements in canonical
  /// enumeration order (indices 1..n).
  static CodeSpecPtr make(ExtFieldPtr ext, std::size_t n, std::size_t k,
                          std::optional<std::vector<std::uint64_t>> L = std::nullopt);

  const ExtFieldPtr& ext() const { return ext_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  const std::vector<Felt>& eval_points() const { return alpha_; }
  const std::vector<Xelt>& eval_points_embedded() const { return alpha_emb_; }
  const std::vector<Felt>& dual_multipliers() const { return u_; }

  /// Position (0-based) of the evaluation point with the given element
  /// index, if it is one.
  std::optional<std::size_t> position_of(felt_t alpha_index) const;

  /// (h(alpha_1), ..., h(alpha_n)); requires deg h < k.
  std::vector<Xelt> encode(const XPoly& h) const;

 private:
  CodeSpec() = default;

  ExtFieldPtr ext_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Felt> alpha_;
  std::vector<Xelt> alpha_emb_;
  std::vector<Felt> u_;
};

}  // namespace fracrs
