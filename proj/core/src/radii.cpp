#include "fracrs/radii.hpp"

#include <cmath>

namespace fracrs {

Int floor_rat(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);  // > 0 canonically
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_pow(const Rat& base, long long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) raise(Errc::division_by_zero, "negative power of zero");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat acc(1), b = base;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

namespace {
Int ipow(std::uint64_t b, std::size_t e) {
  Int acc(1), base(b);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Int binom2(std::size_t m) {  // C(m, 2)
  return Int(m) * Int(m >= 1 ? m - 1 : 0) / 2;
}
}  // namespace

Rat classical_radius(std::size_t n, std::size_t k) { return Rat(Int(n) - Int(k), 2); }

Rat alpha_radius(std::size_t n, std::size_t k, const Rat& alpha) {
  if (alpha > 1 || alpha * Int(n) < Int(k))
    raise(Errc::alpha_out_of_range, "need k/n <= alpha <= 1");
  return (Rat(n) - Rat(k) / alpha) / 2;
}

Rat irs_radius(std::size_t n, std::span<const std::size_t> kj) {
  const std::size_t m = kj.size();
  if (m == 0) raise(Errc::bad_config, "need at least one row dimension");
  Int sum = 0;
  for (std::size_t d : kj) {
    if (d >= n) raise(Errc::row_dimension_overflow, "row dimension must be < n");
    sum += Int(d);
  }
  return Rat(Int(m) * Int(n) - sum, Int(m) + 1);
}

Rat projection_radius_construction(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
                                   std::span<const std::size_t> sizes) {
  if (m < 1 || m > l) raise(Errc::bad_config, "need 1 <= m <= l");
  if (sizes.size() != m) raise(Errc::bad_config, "need one set size per row");
  Int weighted = 0;
  for (std::size_t j = 0; j < m; ++j) weighted += Int(sizes[j]) * Int(j + 1);
  const Rat inner = Rat(Int(n) - Int(k)) - Rat(Int(l) - Int(m), Int(m)) * Rat(weighted);
  return Rat(Int(m), Int(m) + 1) * inner;
}

Rat projection_radius_formula(std::size_t n, std::size_t k, std::size_t l, std::size_t m) {
  if (m < 1 || m > l) raise(Errc::bad_config, "need 1 <= m <= l");
  const Rat num = Rat(Int(m) * Int(n)) + Rat(Int(k) * binom2(m)) -
                  Rat(Int(k) * Int(l), Int(m)) * Rat(binom2(m + 1));
  return num / Rat(Int(m) + 1);
}

RateCondition rate_condition(std::size_t n, std::size_t k, std::size_t l, std::size_t m) {
  if (n == 0) raise(Errc::bad_config, "n must be positive");
  RateCondition rc;
  rc.rate = Rat(Int(k), Int(n));
  rc.bound = Rat(Int(m), Int(m) * (Int(l) - Int(m)) + Int(l));
  rc.holds = rc.rate <= rc.bound;
  return rc;
}

BoundValue failure_bound(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t) {
  BoundValue bv;
  bv.q = q;
  bv.m = m;
  bv.tau = tau;
  bv.t = t;
  const Rat base(ipow(q, m + 1) - 1, Int(q) * (ipow(q, m) - 1));
  const Rat head = rat_pow(base, static_cast<long long>(t)) / Rat(Int(q) - 1);
  const Rat expo = Rat(Int(m) + 1) * (tau - Rat(t));  // q^{-expo}
  if (is_integer(expo)) {
    const Rat exact = head * rat_pow(Rat(q), -boost::multiprecision::numerator(expo)
                                                   .convert_to<long long>());
    bv.exact = exact;
    bv.value = to_double(exact);
  } else {
    bv.value = to_double(head) * std::pow(static_cast<double>(q), -to_double(expo));
  }
  return bv;
}

BoundValue failure_bound_approx(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t) {
  BoundValue bv;
  bv.q = q;
  bv.m = m;
  bv.tau = tau;
  bv.t = t;
  const Rat expo = Rat(Int(m) + 1) * (tau - Rat(t)) + 1;  // q^{-expo}
  if (is_integer(expo)) {
    const Rat exact = Rat(m) * rat_pow(Rat(q), -boost::multiprecision::numerator(expo)
                                                     .convert_to<long long>());
    bv.exact = exact;
    bv.value = to_double(exact);
  } else {
    bv.value = static_cast<double>(m) * std::pow(static_cast<double>(q), -to_double(expo));
  }
  return bv;
}

BoundValue classical_irs_success(std::uint64_t q, std::size_t m, const Rat& tau, std::size_t t) {
  BoundValue bv = failure_bound(q, m, tau, t);
  if (bv.exact) bv.exact = Rat(1) - *bv.exact;
  bv.value = bv.exact ? to_double(*bv.exact) : 1.0 - bv.value;
  return bv;
}

RadiusReport radius_report(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
                           std::optional<std::vector<std::size_t>> sizes,
                           std::optional<Rat> alpha) {
  if (m < 1 || m > l) raise(Errc::bad_config, "need 1 <= m <= l");
  if (k < 1 || k >= n) raise(Errc::bad_config, "need 1 <= k < n");
  RadiusReport rep;
  rep.n = n;
  rep.k = k;
  rep.l = l;
  rep.m = m;
  rep.sizes = sizes ? std::move(*sizes) : std::vector<std::size_t>(m, (k + m - 1) / m);
  if (rep.sizes.size() != m) raise(Errc::bad_config, "need one set size per row");
  rep.alpha = alpha ? std::move(*alpha) : Rat(Int(m), Int(l));

  rep.row_dims.reserve(m);
  for (std::size_t j = 0; j < m; ++j)
    rep.row_dims.push_back(k + rep.sizes[j] * (l - m) * (j + 1));

  rep.tau_classical = classical_radius(n, k);
  rep.tau_alpha = alpha_radius(n, k, rep.alpha);
  rep.tau_irs = irs_radius(n, rep.row_dims);
  rep.tau_formula = projection_radius_formula(n, k, l, m);
  rep.tau_construction = projection_radius_construction(n, k, l, m, rep.sizes);

  rep.tau_classical_floor = floor_rat(rep.tau_classical);
  rep.tau_alpha_floor = floor_rat(rep.tau_alpha);
  rep.tau_irs_floor = floor_rat(rep.tau_irs);
  rep.tau_formula_floor = floor_rat(rep.tau_formula);
  rep.tau_construction_floor = floor_rat(rep.tau_construction);

  const RateCondition rc = rate_condition(n, k, l, m);
  rep.rate = rc.rate;
  rep.rate_bound = rc.bound;
  rep.condition_holds = rc.holds;
  return rep;
}

}  // namespace fracrs
