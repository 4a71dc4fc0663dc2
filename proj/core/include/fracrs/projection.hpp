#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fracrs/fields.hpp"
#include "fracrs/polynomials.hpp"
#include "fracrs/radii.hpp"
#include "fracrs/rs.hpp"

namespace fracrs {

class ProjectionMap;
class ProjectionScheme;
using ProjectionMapPtr = std::shared_ptr<const ProjectionMap>;
using SchemePtr = std::shared_ptr<const ProjectionScheme>;

/// The m x n image of a received word: row j holds the base-field values
/// of the j-th combined trace component at the n evaluation points. Entries
/// are canonical element indices of F_q.
struct ProjectedWord {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<felt_t>> rows;
};

/// The polynomial-level projection: annihilator sets A_0..A_{m-1} in F_q,
/// their annihilators p_j(x) = prod_{w in A_j} (x - w), and the operators
///   T_j(h) = h_{l-m+j} p_j^{(l-m)(j+1)} + sum_{u=0}^{l-m-1} h_u p_j^{u(j+1)},
/// where h_i are the trace components of h. Independent of any particular
/// code: it only needs the field tower, the message degree bound k, and m.
class ProjectionMap {
 public:
  static ProjectionMapPtr make(ExtFieldPtr ext, std::size_t k, std::size_t m,
                               std::vector<std::vector<felt_t>> sets);

  const ExtFieldPtr& ext() const { return ext_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t l() const { return ext_->l(); }
  const std::vector<std::vector<Felt>>& sets() const { return sets_; }
  const std::vector<FPoly>& annihilators() const { return p_; }
  /// Row degree bounds k_j = k + |A_j| (l-m) (j+1).
  const std::vector<std::size_t>& row_dims() const { return kj_; }

  /// The l trace components h_i (coefficient-wise tr(zeta_i .)); requires
  /// deg h < k. Satisfies sum_i nu_i h_i = h.
  std::vector<FPoly> trace_components(const XPoly& h) const;

  /// T_0(h) .. T_{m-1}(h); each of degree < k_j. Requires deg h < k.
  std::vector<FPoly> project_poly(const XPoly& h) const;

 private:
  ProjectionMap() = default;

  ExtFieldPtr ext_;
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Felt>> sets_;
  std::vector<FPoly> p_;
  std::vector<std::size_t> kj_;
};

/// A ProjectionMap bound to a CodeSpec: checks k_j < n, and provides the
/// word-level projection (the per-coordinate download function).
class ProjectionScheme {
 public:
  /// Either explicit sets (element indices of F_q), or set sizes, or
  /// neither (sizes default to ceil(k/m) each). Default sets are drawn
  /// from the canonical field enumeration starting at element 0, skipping
  /// elements already used by earlier sets.
  static SchemePtr make(CodeSpecPtr code, std::size_t m,
                        std::optional<std::vector<std::size_t>> sizes = std::nullopt,
                        std::optional<std::vector<std::vector<felt_t>>> sets = std::nullopt);

  const CodeSpecPtr& code() const { return code_; }
  const ProjectionMapPtr& map() const { return map_; }

  std::size_t n() const { return code_->n(); }
  std::size_t k() const { return code_->k(); }
  std::size_t l() const { return map_->l(); }
  std::size_t m() const { return map_->m(); }
  const std::vector<std::size_t>& row_dims() const { return map_->row_dims(); }

  /// Download fraction m/l.
  Rat alpha() const;
  /// Exact projection decoding radius from the actual set sizes, and its floor.
  const Rat& radius_exact() const { return radius_; }
  std::size_t radius() const { return radius_floor_; }

  std::vector<FPoly> trace_components(const XPoly& h) const { return map_->trace_components(h); }
  std::vector<FPoly> project_poly(const XPoly& h) const { return map_->project_poly(h); }

  /// Column-local word projection: entry (j, i) combines the expanded
  /// coordinates of y_i with precomputed annihilator-power weights, so that
  /// projecting encode(h) gives row j = T_j(h)(L). Emits exactly m*n
  /// base-field symbols.
  ProjectedWord project_word(std::span<const Xelt> y) const;

 private:
  ProjectionScheme() = default;

  CodeSpecPtr code_;
  ProjectionMapPtr map_;
  Rat radius_;
  std::size_t radius_floor_ = 0;
  // weights_[j][i][u] = p_j(alpha_i)^{u(j+1)} for u = 0..l-m-1, and at
  // u = l-m the top weight p_j(alpha_i)^{(l-m)(j+1)}.
  std::vector<std::vector<std::vector<felt_t>>> weights_;
};

}  // namespace fracrs
