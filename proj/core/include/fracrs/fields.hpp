#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fracrs/errors.hpp"

namespace fracrs {

/// Canonical index of an element of F_q: its coefficient vector over F_p
/// (constant term first) read as a little-endian base-p integer. 0 is the
/// zero element and 1 is the multiplicative identity.
using felt_t = std::uint32_t;

/// Coefficient vector of an extension-field element over F_q, constant first.
using xcoeffs_t = boost::container::small_vector<felt_t, 8>;

class FieldCtx;
class ExtFieldCtx;
class Felt;
class Xelt;

using FieldPtr = std::shared_ptr<const FieldCtx>;
using ExtFieldPtr = std::shared_ptr<const ExtFieldCtx>;

/// Arithmetic context for F_q = F_p[u]/(f), q = p^s. Immutable once built and
/// safe to share across threads. Elements keep a raw pointer to their context,
/// so the context must outlive them.
class FieldCtx {
 public:
  /// p must be prime and s >= 1. When no modulus is supplied, the canonical
  /// one is chosen: the monic irreducible of degree s whose non-leading
  /// coefficient vector (constant term first) has the smallest base-p integer
  /// encoding. A supplied modulus must be monic of degree s with coefficients
  /// in [0, p) and is verified irreducible.
  static FieldPtr make(std::uint64_t p, std::uint32_t s,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint64_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return f_; }

  Felt zero() const;
  Felt one() const;
  Felt element(std::uint64_t index) const;  // canonical enumeration
  Felt from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(felt_t a) const;

  felt_t add(felt_t a, felt_t b) const;
  felt_t sub(felt_t a, felt_t b) const;
  felt_t neg(felt_t a) const;
  felt_t mul(felt_t a, felt_t b) const;
  felt_t inv(felt_t a) const;
  felt_t pow(felt_t a, std::uint64_t e) const;
  felt_t frobenius(felt_t a) const;  // a^p

 private:
  FieldCtx() = default;

  felt_t mul_slow(felt_t a, felt_t b) const;
  felt_t add_slow(felt_t a, felt_t b) const;
  void build_tables();

  std::uint64_t p_ = 0;
  std::uint32_t s_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> f_;                 // monic modulus, constant first
  std::vector<std::vector<std::uint32_t>> red_;  // u^{s+i} mod f, i = 0..s-2
  bool lut_ = false;
  std::vector<felt_t> mul_tab_;  // q*q when lut_
  std::vector<felt_t> add_tab_;  // q*q when lut_
  std::vector<felt_t> inv_tab_;  // q when lut_
  std::vector<felt_t> neg_tab_;  // q when lut_
};

/// Value type for an element of F_q.
class Felt {
 public:
  Felt() = default;
  Felt(const FieldCtx* ctx, felt_t v) : ctx_(ctx), v_(v) {}

  felt_t index() const { return v_; }
  const FieldCtx* ctx() const { return ctx_; }
  bool is_zero() const { return v_ == 0; }

  friend Felt operator+(Felt a, Felt b) { return {same(a, b), a.ctx_->add(a.v_, b.v_)}; }
  friend Felt operator-(Felt a, Felt b) { return {same(a, b), a.ctx_->sub(a.v_, b.v_)}; }
  friend Felt operator*(Felt a, Felt b) { return {same(a, b), a.ctx_->mul(a.v_, b.v_)}; }
  friend Felt operator/(Felt a, Felt b) { return {same(a, b), a.ctx_->mul(a.v_, b.ctx_->inv(b.v_))}; }
  Felt operator-() const { return {require(), ctx_->neg(v_)}; }
  Felt& operator+=(Felt b) { return *this = *this + b; }
  Felt& operator-=(Felt b) { return *this = *this - b; }
  Felt& operator*=(Felt b) { return *this = *this * b; }

  friend bool operator==(Felt a, Felt b) { return same(a, b), a.v_ == b.v_; }
  friend bool operator!=(Felt a, Felt b) { return !(a == b); }

 private:
  const FieldCtx* require() const {
    if (!ctx_) raise(Errc::field_mismatch, "element has no field context");
    return ctx_;
  }
  static const FieldCtx* same(const Felt& a, const Felt& b) {
    if (!a.ctx_ || a.ctx_ != b.ctx_)
      raise(Errc::field_mismatch, "operands belong to different field contexts");
    return a.ctx_;
  }

  const FieldCtx* ctx_ = nullptr;
  felt_t v_ = 0;
};

Felt inv(Felt a);
Felt pow(Felt a, std::uint64_t e);
Felt zero_like(Felt a);
Felt one_like(Felt a);

/// Arithmetic context for F_{q^l} = F_q[v]/(g) together with a working
/// F_q-basis zeta and its trace-dual basis nu (tr(zeta_i nu_j) = delta_ij).
class ExtFieldCtx {
 public:
  /// g (optional): monic irreducible of degree l over the base, coefficients
  /// given as element indices, constant term first; defaults to the canonical
  /// one (smallest base-q integer encoding of the non-leading coefficients).
  /// zeta (optional): l element indices forming an F_q-basis; defaults to the
  /// polynomial basis (1, v, ..., v^{l-1}).
  static ExtFieldPtr make(FieldPtr base, std::uint32_t l,
                          std::optional<std::vector<felt_t>> g = std::nullopt,
                          std::optional<std::vector<std::uint64_t>> zeta = std::nullopt);

  const FieldPtr& base() const { return base_; }
  std::uint32_t l() const { return l_; }
  std::uint64_t order() const { return ql_; }  // q^l
  const std::vector<felt_t>& modulus() const { return g_; }

  Xelt zero() const;
  Xelt one() const;
  Xelt element(std::uint64_t index) const;
  Xelt embed(Felt a) const;
  Xelt from_coeffs(xcoeffs_t coeffs) const;
  std::uint64_t index(const Xelt& x) const;

  const std::vector<Xelt>& zeta() const { return zeta_; }
  const std::vector<Xelt>& nu() const { return nu_; }
  std::vector<std::uint64_t> zeta_indices() const;

  /// tr(x) = sum of x^{q^i}, i = 0..l-1; computed by repeated Frobenius.
  Felt trace(const Xelt& x) const;
  /// (tr(zeta_0 x), ..., tr(zeta_{l-1} x)); the coordinate map dual to nu.
  xcoeffs_t expand(const Xelt& x) const;
  /// sum t_i nu_i; inverse of expand.
  Xelt recombine(std::span<const felt_t> t) const;
  Xelt frobenius(const Xelt& x) const;  // x^q

  xcoeffs_t add(const xcoeffs_t& a, const xcoeffs_t& b) const;
  xcoeffs_t sub(const xcoeffs_t& a, const xcoeffs_t& b) const;
  xcoeffs_t neg(const xcoeffs_t& a) const;
  xcoeffs_t mul(const xcoeffs_t& a, const xcoeffs_t& b) const;
  xcoeffs_t inv(const xcoeffs_t& a) const;
  xcoeffs_t pow(const xcoeffs_t& a, std::uint64_t e) const;

 private:
  ExtFieldCtx() = default;

  FieldPtr base_;
  std::uint32_t l_ = 0;
  std::uint64_t ql_ = 0;
  std::vector<felt_t> g_;                   // monic modulus, constant first
  std::vector<std::vector<felt_t>> red_;    // v^{l+i} mod g, i = 0..l-2
  std::vector<Xelt> zeta_;
  std::vector<Xelt> nu_;
  std::vector<std::vector<felt_t>> expand_mat_;  // [i][j] = tr(zeta_i v^j)
};

/// Value type for an element of F_{q^l}.
class Xelt {
 public:
  Xelt() = default;
  Xelt(const ExtFieldCtx* ctx, xcoeffs_t c) : ctx_(ctx), c_(std::move(c)) {}

  const ExtFieldCtx* ctx() const { return ctx_; }
  const xcoeffs_t& coeffs() const { return c_; }
  bool is_zero() const {
    for (felt_t c : c_)
      if (c != 0) return false;
    return true;
  }

  friend Xelt operator+(const Xelt& a, const Xelt& b) { return {same(a, b), a.ctx_->add(a.c_, b.c_)}; }
  friend Xelt operator-(const Xelt& a, const Xelt& b) { return {same(a, b), a.ctx_->sub(a.c_, b.c_)}; }
  friend Xelt operator*(const Xelt& a, const Xelt& b) { return {same(a, b), a.ctx_->mul(a.c_, b.c_)}; }
  friend Xelt operator/(const Xelt& a, const Xelt& b) { return {same(a, b), a.ctx_->mul(a.c_, b.ctx_->inv(b.c_))}; }
  Xelt operator-() const { return {require(), ctx_->neg(c_)}; }
  Xelt& operator+=(const Xelt& b) { return *this = *this + b; }
  Xelt& operator-=(const Xelt& b) { return *this = *this - b; }
  Xelt& operator*=(const Xelt& b) { return *this = *this * b; }

  friend bool operator==(const Xelt& a, const Xelt& b) { return same(a, b), a.c_ == b.c_; }
  friend bool operator!=(const Xelt& a, const Xelt& b) { return !(a == b); }

 private:
  const ExtFieldCtx* require() const {
    if (!ctx_) raise(Errc::field_mismatch, "element has no field context");
    return ctx_;
  }
  static const ExtFieldCtx* same(const Xelt& a, const Xelt& b) {
    if (!a.ctx_ || a.ctx_ != b.ctx_)
      raise(Errc::field_mismatch, "operands belong to different field contexts");
    return a.ctx_;
  }

  const ExtFieldCtx* ctx_ = nullptr;
  xcoeffs_t c_;
};

Xelt inv(const Xelt& a);
Xelt pow(const Xelt& a, std::uint64_t e);
Xelt zero_like(const Xelt& a);
Xelt one_like(const Xelt& a);

/// Convenience builders mirroring FieldCtx::make / ExtFieldCtx::make.
FieldPtr build_field(std::uint64_t p, std::uint32_t s,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
ExtFieldPtr build_extension(FieldPtr base, std::uint32_t l,
                            std::optional<std::vector<felt_t>> g = std::nullopt,
                            std::optional<std::vector<std::uint64_t>> zeta = std::nullopt);

bool is_prime_u64(std::uint64_t n);

}  // namespace fracrs
