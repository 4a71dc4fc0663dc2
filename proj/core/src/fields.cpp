#include "fracrs/fields.hpp"

#include <algorithm>
#include <cstddef>

namespace fracrs {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  // Deterministic Miller-Rabin base set for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Dense polynomial arithmetic over an abstract coefficient field, used for
// irreducibility testing during context construction. Vectors hold element
// encodings, constant term first, trailing zeros trimmed.
template <class Ops>
struct PolyArith {
  using V = std::vector<felt_t>;
  Ops ops;

  static void trim(V& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  V mul(const V& a, const V& b) const {
    if (a.empty() || b.empty()) return {};
    V c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] = ops.add(c[i + j], ops.mul(a[i], b[j]));
    }
    trim(c);
    return c;
  }

  V mod(V a, const V& d) const {
    trim(a);
    const felt_t lead_inv = ops.inv(d.back());
    while (a.size() >= d.size()) {
      const felt_t coef = ops.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - d.size();
      if (coef != 0)
        for (std::size_t j = 0; j + 1 < d.size(); ++j)
          a[shift + j] = ops.sub(a[shift + j], ops.mul(coef, d[j]));
      a.pop_back();
      trim(a);
    }
    return a;
  }

  V gcd(V a, V b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      V r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
      const felt_t li = ops.inv(a.back());
      for (auto& c : a) c = ops.mul(c, li);
    }
    return a;
  }

  V mulmod(const V& a, const V& b, const V& m) const { return mod(mul(a, b), m); }

  V powmod(V a, std::uint64_t e, const V& m) const {
    V r{1};
    a = mod(std::move(a), m);
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }

  // Rabin's test: f (monic, degree d >= 1) is irreducible over a field of
  // order Q iff x^{Q^d} == x (mod f) and gcd(x^{Q^{d/r}} - x, f) = 1 for
  // every prime r dividing d.
  bool irreducible(const V& f, std::uint64_t Q) const {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    std::vector<std::size_t> checkpoints;
    for (std::size_t r = 2; r <= d; ++r)
      if (d % r == 0) {
        bool prime = true;
        for (std::size_t w = 2; w * w <= r; ++w)
          if (r % w == 0) prime = false;
        if (prime) checkpoints.push_back(d / r);
      }
    const V x{0, 1};
    V cur = x;
    for (std::size_t e = 1; e <= d; ++e) {
      cur = powmod(cur, Q, f);  // now cur = x^{Q^e} mod f
      if (std::find(checkpoints.begin(), checkpoints.end(), e) != checkpoints.end()) {
        V diff = cur;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ops.sub(diff[1], 1);
        trim(diff);
        V g = gcd(diff, f);
        if (!(g.size() == 1)) return false;
      }
      if (e == d) {
        V diff = cur;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ops.sub(diff[1], 1);
        trim(diff);
        if (!diff.empty()) return false;
      }
    }
    return true;
  }
};

// Residue arithmetic mod a prime, for building F_q from F_p.
struct PrimeOps {
  std::uint64_t p;
  felt_t add(felt_t a, felt_t b) const { return static_cast<felt_t>((std::uint64_t(a) + b) % p); }
  felt_t sub(felt_t a, felt_t b) const { return static_cast<felt_t>((std::uint64_t(a) + p - b) % p); }
  felt_t mul(felt_t a, felt_t b) const { return static_cast<felt_t>((std::uint64_t(a) * b) % p); }
  felt_t inv(felt_t a) const {
    if (a == 0) raise(Errc::division_by_zero, "inverse of zero residue");
    return static_cast<felt_t>(powmod_u64(a, p - 2, p));
  }
};

// Arithmetic delegated to a constructed base field, for building F_{q^l}.
struct CtxOps {
  const FieldCtx* f;
  felt_t add(felt_t a, felt_t b) const { return f->add(a, b); }
  felt_t sub(felt_t a, felt_t b) const { return f->sub(a, b); }
  felt_t mul(felt_t a, felt_t b) const { return f->mul(a, b); }
  felt_t inv(felt_t a) const { return f->inv(a); }
};

constexpr std::uint64_t kLutMax = 1024;        // build q*q tables up to this order
constexpr std::uint64_t kMaxBaseOrder = 1ULL << 31;
constexpr std::uint64_t kMaxExtOrder = 1ULL << 62;

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldPtr FieldCtx::make(std::uint64_t p, std::uint32_t s,
                        std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime_u64(p)) raise(Errc::not_prime, "p = " + std::to_string(p));
  if (s < 1) raise(Errc::bad_config, "extension degree s must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    if (q > kMaxBaseOrder / p) raise(Errc::unsupported, "field order exceeds 2^31");
    q *= p;
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->s_ = s;
  ctx->q_ = q;

  PolyArith<PrimeOps> pa{PrimeOps{p}};
  if (modulus) {
    auto& f = *modulus;
    if (f.size() != s + 1 || f.back() != 1)
      raise(Errc::bad_config, "modulus must be monic of degree s");
    for (auto c : f)
      if (c >= p) raise(Errc::bad_config, "modulus coefficient out of range");
    std::vector<felt_t> fv(f.begin(), f.end());
    if (!pa.irreducible(fv, p)) raise(Errc::not_irreducible, "supplied base-field modulus");
    ctx->f_ = f;
  } else {
    // Canonical choice: smallest base-p encoding of the non-leading coefficients.
    for (std::uint64_t enc = 0;; ++enc) {
      std::vector<std::uint32_t> f(s + 1, 0);
      std::uint64_t n = enc;
      for (std::uint32_t i = 0; i < s; ++i) {
        f[i] = static_cast<std::uint32_t>(n % p);
        n /= p;
      }
      if (n != 0) raise(Errc::not_irreducible, "no irreducible modulus found");
      f[s] = 1;
      std::vector<felt_t> fv(f.begin(), f.end());
      if (pa.irreducible(fv, p)) {
        ctx->f_ = std::move(f);
        break;
      }
    }
  }

  // u^{s+i} mod f for the multiplication reduce step.
  if (s >= 2) {
    std::vector<std::uint32_t> r(s, 0);
    for (std::uint32_t j = 0; j < s; ++j)
      r[j] = static_cast<std::uint32_t>((p - ctx->f_[j]) % p);  // u^s mod f
    ctx->red_.push_back(r);
    for (std::uint32_t i = 1; i + 1 < s; ++i) {
      std::vector<std::uint32_t> nxt(s, 0);
      const std::uint32_t top = r[s - 1];
      for (std::uint32_t j = s - 1; j >= 1; --j) nxt[j] = r[j - 1];
      nxt[0] = 0;
      if (top != 0)
        for (std::uint32_t j = 0; j < s; ++j)
          nxt[j] = static_cast<std::uint32_t>((nxt[j] + std::uint64_t(top) * ctx->red_[0][j]) % p);
      ctx->red_.push_back(nxt);
      r = std::move(nxt);
    }
  }

  if (q <= kLutMax) ctx->build_tables();
  return ctx;
}

std::vector<std::uint32_t> FieldCtx::digits(felt_t a) const {
  std::vector<std::uint32_t> d(s_, 0);
  std::uint64_t v = a;
  for (std::uint32_t i = 0; i < s_; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return d;
}

Felt FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > s_) raise(Errc::bad_config, "too many digits for field degree");
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) raise(Errc::bad_config, "digit out of range");
    v = v * p_ + digits[i];
  }
  return Felt(this, static_cast<felt_t>(v));
}

felt_t FieldCtx::add_slow(felt_t a, felt_t b) const {
  if (s_ == 1) return static_cast<felt_t>((std::uint64_t(a) + b) % p_);
  std::uint64_t out = 0, pw = 1, va = a, vb = b;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += ((va % p_ + vb % p_) % p_) * pw;
    va /= p_;
    vb /= p_;
    pw *= p_;
  }
  return static_cast<felt_t>(out);
}

felt_t FieldCtx::mul_slow(felt_t a, felt_t b) const {
  if (s_ == 1) return static_cast<felt_t>((std::uint64_t(a) * b) % p_);
  std::uint32_t da[64], db[64];
  std::uint64_t buf[127] = {0};
  std::uint64_t va = a, vb = b;
  for (std::uint32_t i = 0; i < s_; ++i) {
    da[i] = static_cast<std::uint32_t>(va % p_);
    va /= p_;
    db[i] = static_cast<std::uint32_t>(vb % p_);
    vb /= p_;
  }
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < s_; ++j)
      buf[i + j] = (buf[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
  }
  for (std::uint32_t d = 2 * s_ - 2; d >= s_; --d) {
    const std::uint64_t c = buf[d];
    if (c != 0) {
      const auto& row = red_[d - s_];
      for (std::uint32_t j = 0; j < s_; ++j)
        buf[j] = (buf[j] + c * row[j]) % p_;
    }
    if (d == s_) break;
  }
  std::uint64_t out = 0, pw = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += buf[i] * pw;
    pw *= p_;
  }
  return static_cast<felt_t>(out);
}

void FieldCtx::build_tables() {
  const std::size_t q = static_cast<std::size_t>(q_);
  mul_tab_.assign(q * q, 0);
  add_tab_.assign(q * q, 0);
  inv_tab_.assign(q, 0);
  neg_tab_.assign(q, 0);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const felt_t m = mul_slow(static_cast<felt_t>(a), static_cast<felt_t>(b));
      mul_tab_[a * q + b] = m;
      add_tab_[a * q + b] = add_slow(static_cast<felt_t>(a), static_cast<felt_t>(b));
      if (m == 1) inv_tab_[a] = static_cast<felt_t>(b);
    }
  }
  for (std::size_t a = 0; a < q; ++a) {
    // neg(a) is the additive inverse: the unique b with a + b = 0.
    for (std::size_t b = 0; b < q; ++b)
      if (add_tab_[a * q + b] == 0) {
        neg_tab_[a] = static_cast<felt_t>(b);
        break;
      }
  }
  lut_ = true;
}

felt_t FieldCtx::add(felt_t a, felt_t b) const {
  if (lut_) return add_tab_[std::size_t(a) * q_ + b];
  return add_slow(a, b);
}

felt_t FieldCtx::sub(felt_t a, felt_t b) const { return add(a, neg(b)); }

felt_t FieldCtx::neg(felt_t a) const {
  if (lut_) return neg_tab_[a];
  if (s_ == 1) return a == 0 ? 0 : static_cast<felt_t>(p_ - a);
  std::uint64_t out = 0, pw = 1, va = a;
  for (std::uint32_t i = 0; i < s_; ++i) {
    const std::uint64_t d = va % p_;
    out += (d == 0 ? 0 : p_ - d) * pw;
    va /= p_;
    pw *= p_;
  }
  return static_cast<felt_t>(out);
}

felt_t FieldCtx::mul(felt_t a, felt_t b) const {
  if (lut_) return mul_tab_[std::size_t(a) * q_ + b];
  return mul_slow(a, b);
}

felt_t FieldCtx::inv(felt_t a) const {
  if (a == 0) raise(Errc::division_by_zero, "inverse of zero");
  if (lut_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

felt_t FieldCtx::pow(felt_t a, std::uint64_t e) const {
  felt_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

felt_t FieldCtx::frobenius(felt_t a) const { return pow(a, p_); }

Felt FieldCtx::zero() const { return Felt(this, 0); }
Felt FieldCtx::one() const { return Felt(this, 1); }

Felt FieldCtx::element(std::uint64_t index) const {
  if (index >= q_) raise(Errc::bad_config, "element index out of range");
  return Felt(this, static_cast<felt_t>(index));
}

Felt inv(Felt a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return Felt(a.ctx(), a.ctx()->inv(a.index()));
}

Felt pow(Felt a, std::uint64_t e) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return Felt(a.ctx(), a.ctx()->pow(a.index(), e));
}

Felt zero_like(Felt a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return a.ctx()->zero();
}

Felt one_like(Felt a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return a.ctx()->one();
}

// ---------------------------------------------------------------------------
// ExtFieldCtx

ExtFieldPtr ExtFieldCtx::make(FieldPtr base, std::uint32_t l,
                              std::optional<std::vector<felt_t>> g,
                              std::optional<std::vector<std::uint64_t>> zeta) {
  if (!base) raise(Errc::bad_config, "null base field");
  if (l < 1) raise(Errc::bad_config, "extension degree l must be >= 1");
  const std::uint64_t q = base->order();
  std::uint64_t ql = 1;
  for (std::uint32_t i = 0; i < l; ++i) {
    if (ql > kMaxExtOrder / q) raise(Errc::unsupported, "extension order exceeds 2^62");
    ql *= q;
  }

  auto ctx = std::shared_ptr<ExtFieldCtx>(new ExtFieldCtx());
  ctx->base_ = std::move(base);
  ctx->l_ = l;
  ctx->ql_ = ql;

  PolyArith<CtxOps> pa{CtxOps{ctx->base_.get()}};
  if (g) {
    auto& gv = *g;
    if (gv.size() != l + 1 || gv.back() != 1)
      raise(Errc::bad_config, "extension modulus must be monic of degree l");
    for (auto c : gv)
      if (c >= q) raise(Errc::bad_config, "extension modulus coefficient out of range");
    std::vector<felt_t> tmp(gv.begin(), gv.end());
    if (!pa.irreducible(tmp, q)) raise(Errc::not_irreducible, "supplied extension modulus");
    ctx->g_ = gv;
  } else {
    for (std::uint64_t enc = 0;; ++enc) {
      std::vector<felt_t> gv(l + 1, 0);
      std::uint64_t n = enc;
      for (std::uint32_t i = 0; i < l; ++i) {
        gv[i] = static_cast<felt_t>(n % q);
        n /= q;
      }
      if (n != 0) raise(Errc::not_irreducible, "no irreducible extension modulus found");
      gv[l] = 1;
      if (pa.irreducible(gv, q)) {
        ctx->g_ = std::move(gv);
        break;
      }
    }
  }

  const FieldCtx* bf = ctx->base_.get();
  if (l >= 2) {
    std::vector<felt_t> r(l, 0);
    for (std::uint32_t j = 0; j < l; ++j) r[j] = bf->neg(ctx->g_[j]);  // v^l mod g
    ctx->red_.push_back(r);
    for (std::uint32_t i = 1; i + 1 < l; ++i) {
      std::vector<felt_t> nxt(l, 0);
      const felt_t top = r[l - 1];
      for (std::uint32_t j = l - 1; j >= 1; --j) nxt[j] = r[j - 1];
      nxt[0] = 0;
      if (top != 0)
        for (std::uint32_t j = 0; j < l; ++j)
          nxt[j] = bf->add(nxt[j], bf->mul(top, ctx->red_[0][j]));
      ctx->red_.push_back(nxt);
      r = std::move(nxt);
    }
  }

  // Working basis zeta: polynomial basis unless caller supplies one.
  ctx->zeta_.reserve(l);
  if (zeta) {
    if (zeta->size() != l) raise(Errc::bad_config, "zeta must contain exactly l elements");
    for (std::uint64_t idx : *zeta) ctx->zeta_.push_back(ctx->element(idx));
  } else {
    for (std::uint32_t i = 0; i < l; ++i) {
      xcoeffs_t c(l, 0);
      c[i] = 1;
      ctx->zeta_.push_back(Xelt(ctx.get(), std::move(c)));
    }
  }

  // Trace-Gram matrix of zeta; its inverse expresses the dual basis nu in
  // terms of zeta. Singular <=> zeta is not a basis.
  const std::uint32_t L = l;
  std::vector<std::vector<felt_t>> gram(L, std::vector<felt_t>(L, 0));
  for (std::uint32_t i = 0; i < L; ++i)
    for (std::uint32_t j = 0; j < L; ++j)
      gram[i][j] = ctx->trace(ctx->zeta_[i] * ctx->zeta_[j]).index();

  std::vector<std::vector<felt_t>> aug(L, std::vector<felt_t>(2 * L, 0));
  for (std::uint32_t i = 0; i < L; ++i) {
    for (std::uint32_t j = 0; j < L; ++j) aug[i][j] = gram[i][j];
    aug[i][L + i] = 1;
  }
  for (std::uint32_t col = 0; col < L; ++col) {
    std::uint32_t piv = col;
    while (piv < L && aug[piv][col] == 0) ++piv;
    if (piv == L) raise(Errc::basis_not_independent, "trace-Gram matrix is singular");
    std::swap(aug[piv], aug[col]);
    const felt_t s = bf->inv(aug[col][col]);
    for (std::uint32_t j = 0; j < 2 * L; ++j) aug[col][j] = bf->mul(aug[col][j], s);
    for (std::uint32_t r = 0; r < L; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const felt_t fct = aug[r][col];
      for (std::uint32_t j = 0; j < 2 * L; ++j)
        aug[r][j] = bf->sub(aug[r][j], bf->mul(fct, aug[col][j]));
    }
  }

  ctx->nu_.reserve(L);
  for (std::uint32_t j = 0; j < L; ++j) {
    Xelt acc = ctx->zero();
    for (std::uint32_t w = 0; w < L; ++w) {
      const felt_t c = aug[w][L + j];  // (Gram^{-1})[w][j]
      if (c == 0) continue;
      xcoeffs_t scaled = ctx->zeta_[w].coeffs();
      for (auto& x : scaled) x = bf->mul(x, c);
      acc = acc + Xelt(ctx.get(), std::move(scaled));
    }
    ctx->nu_.push_back(acc);
  }

  for (std::uint32_t i = 0; i < L; ++i)
    for (std::uint32_t j = 0; j < L; ++j) {
      const felt_t tr = ctx->trace(ctx->zeta_[i] * ctx->nu_[j]).index();
      if (tr != (i == j ? 1u : 0u))
        raise(Errc::basis_not_independent, "dual basis verification failed");
    }

  ctx->expand_mat_.assign(L, std::vector<felt_t>(L, 0));
  for (std::uint32_t i = 0; i < L; ++i)
    for (std::uint32_t j = 0; j < L; ++j) {
      xcoeffs_t vj(l, 0);
      vj[j] = 1;
      ctx->expand_mat_[i][j] = ctx->trace(ctx->zeta_[i] * Xelt(ctx.get(), std::move(vj))).index();
    }

  return ctx;
}

Xelt ExtFieldCtx::zero() const { return Xelt(this, xcoeffs_t(l_, 0)); }

Xelt ExtFieldCtx::one() const {
  xcoeffs_t c(l_, 0);
  c[0] = 1;
  return Xelt(this, std::move(c));
}

Xelt ExtFieldCtx::element(std::uint64_t index) const {
  if (index >= ql_) raise(Errc::bad_config, "element index out of range");
  const std::uint64_t q = base_->order();
  xcoeffs_t c(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) {
    c[i] = static_cast<felt_t>(index % q);
    index /= q;
  }
  return Xelt(this, std::move(c));
}

Xelt ExtFieldCtx::embed(Felt a) const {
  if (a.ctx() != base_.get())
    raise(Errc::field_mismatch, "embedding element from a different base field");
  xcoeffs_t c(l_, 0);
  c[0] = a.index();
  return Xelt(this, std::move(c));
}

Xelt ExtFieldCtx::from_coeffs(xcoeffs_t coeffs) const {
  if (coeffs.size() > l_) raise(Errc::bad_config, "too many coefficients");
  const std::uint64_t q = base_->order();
  for (felt_t c : coeffs)
    if (c >= q) raise(Errc::bad_config, "coefficient index out of range");
  coeffs.resize(l_, 0);
  return Xelt(this, std::move(coeffs));
}

std::uint64_t ExtFieldCtx::index(const Xelt& x) const {
  if (x.ctx() != this) raise(Errc::field_mismatch, "element from a different extension");
  const std::uint64_t q = base_->order();
  std::uint64_t v = 0;
  for (std::size_t i = x.coeffs().size(); i-- > 0;) v = v * q + x.coeffs()[i];
  return v;
}

std::vector<std::uint64_t> ExtFieldCtx::zeta_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(l_);
  for (const auto& z : zeta_) out.push_back(index(z));
  return out;
}

xcoeffs_t ExtFieldCtx::add(const xcoeffs_t& a, const xcoeffs_t& b) const {
  xcoeffs_t c(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) c[i] = base_->add(a[i], b[i]);
  return c;
}

xcoeffs_t ExtFieldCtx::sub(const xcoeffs_t& a, const xcoeffs_t& b) const {
  xcoeffs_t c(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) c[i] = base_->sub(a[i], b[i]);
  return c;
}

xcoeffs_t ExtFieldCtx::neg(const xcoeffs_t& a) const {
  xcoeffs_t c(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) c[i] = base_->neg(a[i]);
  return c;
}

xcoeffs_t ExtFieldCtx::mul(const xcoeffs_t& a, const xcoeffs_t& b) const {
  const FieldCtx* bf = base_.get();
  if (l_ == 1) return xcoeffs_t{bf->mul(a[0], b[0])};
  felt_t buf[128] = {0};  // 2l-1 <= 123 given the order bound q^l <= 2^62
  for (std::uint32_t i = 0; i < l_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < l_; ++j)
      if (b[j] != 0) buf[i + j] = bf->add(buf[i + j], bf->mul(a[i], b[j]));
  }
  for (std::uint32_t d = 2 * l_ - 2; d >= l_; --d) {
    const felt_t c = buf[d];
    if (c != 0) {
      const auto& row = red_[d - l_];
      for (std::uint32_t j = 0; j < l_; ++j)
        if (row[j] != 0) buf[j] = bf->add(buf[j], bf->mul(c, row[j]));
    }
    if (d == l_) break;
  }
  return xcoeffs_t(buf, buf + l_);
}

xcoeffs_t ExtFieldCtx::pow(const xcoeffs_t& a, std::uint64_t e) const {
  xcoeffs_t r(l_, 0);
  r[0] = 1;
  xcoeffs_t x = a;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

xcoeffs_t ExtFieldCtx::inv(const xcoeffs_t& a) const {
  bool zero = true;
  for (felt_t c : a)
    if (c != 0) zero = false;
  if (zero) raise(Errc::division_by_zero, "inverse of zero");
  return pow(a, ql_ - 2);
}

Xelt ExtFieldCtx::frobenius(const Xelt& x) const {
  if (x.ctx() != this) raise(Errc::field_mismatch, "element from a different extension");
  return Xelt(this, pow(x.coeffs(), base_->order()));
}

Felt ExtFieldCtx::trace(const Xelt& x) const {
  if (x.ctx() != this) raise(Errc::field_mismatch, "element from a different extension");
  Xelt acc = x;
  Xelt cur = x;
  for (std::uint32_t i = 1; i < l_; ++i) {
    cur = frobenius(cur);
    acc = acc + cur;
  }
  for (std::uint32_t i = 1; i < l_; ++i)
    if (acc.coeffs()[i] != 0) raise(Errc::unsupported, "trace left the base field");
  return Felt(base_.get(), acc.coeffs()[0]);
}

xcoeffs_t ExtFieldCtx::expand(const Xelt& x) const {
  if (x.ctx() != this) raise(Errc::field_mismatch, "element from a different extension");
  const FieldCtx* bf = base_.get();
  xcoeffs_t out(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) {
    felt_t acc = 0;
    const auto& row = expand_mat_[i];
    for (std::uint32_t j = 0; j < l_; ++j)
      if (x.coeffs()[j] != 0) acc = bf->add(acc, bf->mul(row[j], x.coeffs()[j]));
    out[i] = acc;
  }
  return out;
}

Xelt ExtFieldCtx::recombine(std::span<const felt_t> t) const {
  if (t.size() != l_) raise(Errc::length_mismatch, "recombine needs exactly l coordinates");
  const FieldCtx* bf = base_.get();
  xcoeffs_t acc(l_, 0);
  for (std::uint32_t i = 0; i < l_; ++i) {
    if (t[i] == 0) continue;
    const auto& nc = nu_[i].coeffs();
    for (std::uint32_t j = 0; j < l_; ++j)
      if (nc[j] != 0) acc[j] = bf->add(acc[j], bf->mul(t[i], nc[j]));
  }
  return Xelt(this, std::move(acc));
}

Xelt inv(const Xelt& a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return Xelt(a.ctx(), a.ctx()->inv(a.coeffs()));
}

Xelt pow(const Xelt& a, std::uint64_t e) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return Xelt(a.ctx(), a.ctx()->pow(a.coeffs(), e));
}

Xelt zero_like(const Xelt& a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return a.ctx()->zero();
}

Xelt one_like(const Xelt& a) {
  if (!a.ctx()) raise(Errc::field_mismatch, "element has no field context");
  return a.ctx()->one();
}

FieldPtr build_field(std::uint64_t p, std::uint32_t s,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  return FieldCtx::make(p, s, std::move(modulus));
}

ExtFieldPtr build_extension(FieldPtr base, std::uint32_t l, std::optional<std::vector<felt_t>> g,
                            std::optional<std::vector<std::uint64_t>> zeta) {
  return ExtFieldCtx::make(std::move(base), l, std::move(g), std::move(zeta));
}

}  // namespace fracrs
