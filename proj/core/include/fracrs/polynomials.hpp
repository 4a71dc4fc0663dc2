#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fracrs/errors.hpp"
#include "fracrs/fields.hpp"

namespace fracrs {

/// Dense univariate polynomial with coefficients of field type F (Felt or
/// Xelt), constant term first. The coefficient vector is kept trimmed: no
/// trailing zero coefficients, and the zero polynomial is the empty vector.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }

  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  /// True iff deg < k, with the zero polynomial below every bound.
  bool degree_less(std::size_t k) const { return c_.size() <= k; }

  /// Coefficient of x^i; zero coefficients above the degree are represented
  /// implicitly, so i must be < size. Use degree()/coeffs() to range-check.
  const F& coeff(std::size_t i) const { return c_.at(i); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly& lo = a.c_.size() <= b.c_.size() ? a : b;
    const Poly& hi = a.c_.size() <= b.c_.size() ? b : a;
    std::vector<F> out = hi.c_;
    for (std::size_t i = 0; i < lo.c_.size(); ++i) out[i] = out[i] + lo.c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    std::vector<F> out;
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.c_.size() && i < b.c_.size())
        out.push_back(a.c_[i] - b.c_[i]);
      else if (i < a.c_.size())
        out.push_back(a.c_[i]);
      else
        out.push_back(-b.c_[i]);
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (const F& c : c_) out.push_back(-c);
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(F c) const {
    if (c.is_zero()) return {};
    std::vector<F> out;
    out.reserve(c_.size());
    for (const F& x : c_) out.push_back(x * c);
    return Poly(std::move(out));
  }

  /// Multiply by x^m.
  Poly shifted_up(std::size_t m) const {
    if (c_.empty() || m == 0) return *this;
    std::vector<F> out(c_.size() + m, zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) out[m + i] = c_[i];
    return Poly(std::move(out));
  }

  Poly powed(std::uint64_t e) const {
    if (e == 0) {
      if (c_.empty()) raise(Errc::zero_polynomial, "zero polynomial to the zeroth power");
      return constant(one_like(c_[0]));
    }
    Poly base = *this;
    std::optional<Poly> acc;
    while (e) {
      if (e & 1) acc = acc ? *acc * base : base;
      base = base * base;
      e >>= 1;
    }
    return *acc;
  }

  /// Horner evaluation; the zero polynomial evaluates to zero.
  F evaluate(F x) const {
    if (c_.empty()) return zero_like(x);
    F acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) raise(Errc::division_by_zero, "polynomial division by zero");
    if (c_.size() < d.c_.size()) return {Poly{}, *this};
    const F lead_inv = inv(d.c_.back());
    std::vector<F> rem = c_;
    std::vector<F> quo(c_.size() - d.c_.size() + 1, zero_like(c_[0]));
    for (std::size_t i = quo.size(); i-- > 0;) {
      const F coef = rem[i + d.c_.size() - 1] * lead_inv;
      quo[i] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] = rem[i + j] - coef * d.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Division known to be exact; a nonzero remainder is an error.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) raise(Errc::inexact_division, "division left a nonzero remainder");
    return q;
  }

  /// Indices i with evaluate(S[i]) == 0. Refuses the zero polynomial, whose
  /// root set would be all of S.
  std::vector<std::size_t> roots_in(std::span<const F> S) const {
    if (c_.empty()) raise(Errc::zero_polynomial, "root search on the zero polynomial");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (evaluate(S[i]).is_zero()) out.push_back(i);
    return out;
  }

  /// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
  static Poly interpolate(std::span<const F> xs, std::span<const F> ys) {
    if (xs.size() != ys.size())
      raise(Errc::length_mismatch, "interpolation point lists differ in length");
    if (xs.empty()) raise(Errc::bad_config, "interpolation needs at least one point");
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (xs[i] == xs[j]) raise(Errc::duplicate_abscissa, "repeated interpolation abscissa");

    const F one = one_like(xs[0]);
    // Master polynomial M(x) = prod (x - x_i), then per-point quotients by
    // synthetic division: L_i = M / (x - x_i) scaled by 1 / L_i(x_i).
    Poly master = constant(one);
    for (const F& x : xs) master = master * Poly{-x, one};

    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (ys[i].is_zero()) continue;
      // Synthetic division of master by (x - xs[i]); remainder is zero.
      std::vector<F> quo(master.c_.size() - 1, zero_like(one));
      F carry = master.c_.back();
      for (std::size_t j = master.c_.size() - 1; j-- > 0;) {
        quo[j] = carry;
        carry = master.c_[j] + carry * xs[i];
      }
      Poly li(std::move(quo));
      acc = acc + li.scaled(ys[i] * inv(li.evaluate(xs[i])));
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

using FPoly = Poly<Felt>;
using XPoly = Poly<Xelt>;

}  // namespace fracrs
