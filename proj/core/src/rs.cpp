#include "fracrs/rs.hpp"

#include <algorithm>

namespace fracrs {

CodeSpecPtr CodeSpec::make(ExtFieldPtr ext, std::size_t n, std::size_t k,
                           std::optional<std::vector<std::uint64_t>> L) {
  if (!ext) raise(Errc::bad_config, "null field context");
  const std::uint64_t q = ext->base()->order();
  if (k < 1 || k >= n) raise(Errc::bad_config, "need 1 <= k < n");
  if (n > q - 1)
    raise(Errc::length_exceeds_field,
          "n = " + std::to_string(n) + " exceeds the " + std::to_string(q - 1) +
              " nonzero base-field elements");

  auto spec = std::shared_ptr<CodeSpec>(new CodeSpec());
  spec->ext_ = std::move(ext);
  spec->n_ = n;
  spec->k_ = k;

  const FieldCtx* bf = spec->ext_->base().get();
  std::vector<std::uint64_t> idx;
  if (L) {
    idx = std::move(*L);
    if (idx.size() != n) raise(Errc::bad_evaluation_set, "evaluation set must have n elements");
    for (std::uint64_t a : idx) {
      if (a == 0) raise(Errc::bad_evaluation_set, "evaluation points must be nonzero");
      if (a >= q) raise(Errc::bad_evaluation_set, "evaluation point index out of range");
    }
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      raise(Errc::bad_evaluation_set, "evaluation points must be distinct");
  } else {
    idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
  }

  spec->alpha_.reserve(n);
  spec->alpha_emb_.reserve(n);
  for (std::uint64_t a : idx) {
    Felt e = bf->element(a);
    spec->alpha_.push_back(e);
    spec->alpha_emb_.push_back(spec->ext_->embed(e));
  }

  spec->u_.reserve(n);
  for (std::size_t h = 0; h < n; ++h) {
    Felt prod = bf->one();
    for (std::size_t h2 = 0; h2 < n; ++h2) {
      if (h2 == h) continue;
      prod = prod * (spec->alpha_[h] - spec->alpha_[h2]);
    }
    spec->u_.push_back(inv(prod));
  }

  return spec;
}

std::optional<std::size_t> CodeSpec::position_of(felt_t alpha_index) const {
  for (std::size_t i = 0; i < alpha_.size(); ++i)
    if (alpha_[i].index() == alpha_index) return i;
  return std::nullopt;
}

std::vector<Xelt> CodeSpec::encode(const XPoly& h) const {
  if (!h.degree_less(k_)) raise(Errc::degree_too_high, "message degree must be < k");
  std::vector<Xelt> out;
  out.reserve(n_);
  for (const Xelt& a : alpha_emb_) out.push_back(h.evaluate(a));
  return out;
}

}  // namespace fracrs
