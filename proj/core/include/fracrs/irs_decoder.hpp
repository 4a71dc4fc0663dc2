#pragma once

#include <cstddef>
#include <vector>

#include "fracrs/errors.hpp"
#include "fracrs/polynomials.hpp"
#include "fracrs/projection.hpp"

namespace fracrs {

/// Row syndromes of a projected word. Row j holds S_1..S_{n-k_j} with
/// S_i = sum_h Y_{j,h} u_h alpha_h^{i-1}; all zero exactly when the row is
/// an evaluation of a polynomial of degree < k_j on the points.
struct SyndromeSet {
  SchemePtr scheme;
  std::vector<std::vector<Felt>> rows;

  bool all_zero() const {
    for (const auto& r : rows)
      for (const Felt& s : r)
        if (!s.is_zero()) return false;
    return true;
  }
};

SyndromeSet syndromes(const SchemePtr& scheme, const ProjectedWord& Y);

/// A t-valid error locator: monic of degree t with exactly t distinct roots
/// among the evaluation points; positions are the 0-based indices of those
/// roots in the evaluation set, ascending.
struct LocatorResult {
  std::size_t t = 0;
  FPoly locator;
  std::vector<std::size_t> positions;
};

/// Smallest-t search over the stacked shifted-syndrome key equation: for
/// each row j and each shift v = 1..n-k_j-t, the unknowns Lambda_1..Lambda_t
/// of Lambda(x) = x^t + Lambda_1 x^{t-1} + ... + Lambda_t satisfy
///   sum_{i=1}^{t} Lambda_i S_{v+t-i} = -S_{v+t}.
/// Underdetermined systems are resolved by trying the particular solution
/// and then each nullspace-basis offset in deterministic elimination order;
/// the first t-valid candidate wins.
Outcome<LocatorResult> solve_key_equation(const SyndromeSet& synd, std::size_t t_max);

/// Masked error values per row at the located columns; zero elsewhere.
struct ErrorMatrix {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<felt_t>> rows;
};

/// Per-row error values: solve the square t x t system
/// sum_e u_e alpha_e^{i} X_{j,e} = S_{i+1} (i = 0..t-1) shared across rows,
/// then require the remaining n-k_j-t syndrome equations of each row to be
/// consistent. Fails with row_underdetermined when some n-k_j < t, or
/// inconsistent when a leftover equation is violated (miscorrection caught).
Outcome<ErrorMatrix> error_values(const ProjectionScheme& scheme, const SyndromeSet& synd,
                                  const LocatorResult& loc);

struct CorrectedWord {
  ProjectedWord word;
  std::size_t t = 0;
};

/// syndromes -> key equation (t_max = floor of the scheme radius) -> error
/// values -> subtract. A clean word short-circuits with t = 0.
Outcome<CorrectedWord> collaborative_decode(const SchemePtr& scheme, const ProjectedWord& Y);

}  // namespace fracrs
