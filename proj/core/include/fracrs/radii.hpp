#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracrs/errors.hpp"

namespace fracrs {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Floor of an exact rational (works for negative values too).
Int floor_rat(const Rat& r);
bool is_integer(const Rat& r);
double to_double(const Rat& r);

/// base^e for integer e (negative allowed; base must be nonzero then).
Rat rat_pow(const Rat& base, long long e);

/// (n - k) / 2: half the minimum distance, the classical unique-decoding
/// radius of an [n, k] MDS code.
Rat classical_radius(std::size_t n, std::size_t k);

/// (n - k/alpha) / 2: the radius achievable when only an alpha-fraction of
/// the received symbols may be downloaded. Requires k/n <= alpha <= 1.
Rat alpha_radius(std::size_t n, std::size_t k, const Rat& alpha);

/// (m n - sum k_j) / (m + 1): collaborative decoding radius of an
/// m-row interleaved RS code with row dimensions k_j, all < n.
Rat irs_radius(std::size_t n, std::span<const std::size_t> kj);

/// (m/(m+1)) (n - k - ((l-m)/m) sum |A_j| (j+1)): the projection radius
/// obtained from actual annihilator-set sizes. Equals irs_radius applied to
/// the derived row dimensions k_j = k + |A_j|(l-m)(j+1).
Rat projection_radius_construction(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
                                   std::span<const std::size_t> sizes);

/// (1/(m+1)) (m n + k C(m,2) - (k l / m) C(m+1,2)): the closed-form radius
/// with equal set sizes k/m, evaluated exactly even when m does not divide k.
Rat projection_radius_formula(std::size_t n, std::size_t k, std::size_t l, std::size_t m);

struct RateCondition {
  Rat rate;        // k / n
  Rat bound;       // m / (m(l-m) + l)
  bool holds;      // rate <= bound
};
RateCondition rate_condition(std::size_t n, std::size_t k, std::size_t l, std::size_t m);

/// A probability bound: exact rational when the exponent (m+1)(tau-t) is an
/// integer, double rendering always.
struct BoundValue {
  std::optional<Rat> exact;
  double value = 0.0;
  std::uint64_t q = 0;
  std::size_t m = 0;
  Rat tau;
  std::size_t t = 0;
};

/// ((q^{m+1} - 1) / (q (q^m - 1)))^t * q^{-(m+1)(tau - t)} / (q - 1):
/// upper bound on the probability that collaborative decoding of t planted
/// column errors fails. Not clamped to [0, 1].
BoundValue failure_bound(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t);

/// m * q^{-(m+1)(tau - t) - 1}: the coarse form of the same bound.
BoundValue failure_bound_approx(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t);

/// 1 - failure_bound(...): the success-probability form.
BoundValue classical_irs_success(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t);

/// Every radius for one parameter set, exact and floored.
struct RadiusReport {
  std::size_t n = 0, k = 0, l = 0, m = 0;
  std::vector<std::size_t> sizes;     // |A_j| used for the construction radius
  std::vector<std::size_t> row_dims;  // derived k_j
  Rat alpha;                          // download fraction (defaults to m/l)

  Rat tau_classical;
  Int tau_classical_floor;
  Rat tau_alpha;
  Int tau_alpha_floor;
  Rat tau_irs;
  Int tau_irs_floor;
  Rat tau_formula;
  Int tau_formula_floor;
  Rat tau_construction;
  Int tau_construction_floor;

  Rat rate;
  Rat rate_bound;
  bool condition_holds = false;
};

/// sizes default to ceil(k/m) each; alpha defaults to m/l.
RadiusReport radius_report(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
                           std::optional<std::vector<std::size_t>> sizes = std::nullopt,
                           std::optional<Rat> alpha = std::nullopt);

}  // namespace fracrs
