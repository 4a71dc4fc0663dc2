#include "fracrs/projection.hpp"

#include <algorithm>

namespace fracrs {

ProjectionMapPtr ProjectionMap::make(ExtFieldPtr ext, std::size_t k, std::size_t m,
                                     std::vector<std::vector<felt_t>> sets) {
  if (!ext) raise(Errc::bad_config, "null field context");
  const std::size_t l = ext->l();
  if (m < 1 || m > l) raise(Errc::bad_config, "need 1 <= m <= l");
  if (k < 1) raise(Errc::bad_config, "need k >= 1");
  if (sets.size() != m) raise(Errc::bad_config, "need exactly m annihilator sets");

  const FieldCtx* bf = ext->base().get();
  const std::uint64_t q = bf->order();
  std::vector<felt_t> all;
  std::size_t total = 0;
  for (const auto& s : sets) {
    total += s.size();
    for (felt_t w : s) {
      if (w >= q) raise(Errc::bad_config, "annihilator-set element index out of range");
      all.push_back(w);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    raise(Errc::sets_not_disjoint, "annihilator sets must be pairwise disjoint");
  if (total < k)
    raise(Errc::insufficient_sets,
          "total annihilator-set size " + std::to_string(total) + " < k = " + std::to_string(k));

  auto map = std::shared_ptr<ProjectionMap>(new ProjectionMap());
  map->ext_ = std::move(ext);
  map->k_ = k;
  map->m_ = m;

  map->sets_.reserve(m);
  map->p_.reserve(m);
  map->kj_.reserve(m);
  const Felt one = bf->one();
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Felt> elems;
    elems.reserve(sets[j].size());
    FPoly pj = FPoly::constant(one);
    for (felt_t w : sets[j]) {
      Felt e = bf->element(w);
      elems.push_back(e);
      pj = pj * FPoly{-e, one};
    }
    map->sets_.push_back(std::move(elems));
    map->p_.push_back(std::move(pj));
    map->kj_.push_back(k + sets[j].size() * (l - m) * (j + 1));
  }
  return map;
}

std::vector<FPoly> ProjectionMap::trace_components(const XPoly& h) const {
  if (!h.degree_less(k_)) raise(Errc::degree_too_high, "message degree must be < k");
  const std::size_t l = ext_->l();
  const FieldCtx* bf = ext_->base().get();
  std::vector<std::vector<Felt>> cols(l);
  for (auto& c : cols) c.reserve(h.coeffs().size());
  for (const Xelt& a : h.coeffs()) {
    const xcoeffs_t e = ext_->expand(a);
    for (std::size_t i = 0; i < l; ++i) cols[i].emplace_back(bf, e[i]);
  }
  std::vector<FPoly> out;
  out.reserve(l);
  for (auto& c : cols) out.emplace_back(std::move(c));
  return out;
}

std::vector<FPoly> ProjectionMap::project_poly(const XPoly& h) const {
  const std::size_t l = ext_->l();
  const std::vector<FPoly> comp = trace_components(h);
  const Felt one = ext_->base()->one();
  std::vector<FPoly> out;
  out.reserve(m_);
  for (std::size_t j = 0; j < m_; ++j) {
    const FPoly step = p_[j].powed(j + 1);
    FPoly acc = FPoly::constant(one);  // step^u as u advances
    FPoly tj;
    for (std::size_t u = 0; u + m_ < l; ++u) {  // u = 0 .. l-m-1
      tj = tj + comp[u] * acc;
      acc = acc * step;
    }
    tj = tj + comp[l - m_ + j] * acc;  // acc = step^{l-m}
    out.push_back(std::move(tj));
  }
  return out;
}

SchemePtr ProjectionScheme::make(CodeSpecPtr code, std::size_t m,
                                 std::optional<std::vector<std::size_t>> sizes,
                                 std::optional<std::vector<std::vector<felt_t>>> sets) {
  if (!code) raise(Errc::bad_config, "null code");
  const std::size_t l = code->ext()->l();
  const std::size_t k = code->k();
  const std::size_t n = code->n();
  if (m < 1 || m > l) raise(Errc::bad_config, "need 1 <= m <= l");

  std::vector<std::vector<felt_t>> chosen;
  if (sets) {
    if (sizes) raise(Errc::bad_config, "give either set sizes or explicit sets, not both");
    chosen = std::move(*sets);
  } else {
    std::vector<std::size_t> sz =
        sizes ? std::move(*sizes) : std::vector<std::size_t>(m, (k + m - 1) / m);
    if (sz.size() != m) raise(Errc::bad_config, "need one set size per row");
    const std::uint64_t q = code->ext()->base()->order();
    felt_t next = 0;
    chosen.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t c = 0; c < sz[j]; ++c) {
        if (next >= q) raise(Errc::bad_config, "base field too small for the requested sets");
        chosen[j].push_back(next++);
      }
    }
  }

  auto map = ProjectionMap::make(code->ext(), k, m, std::move(chosen));
  for (std::size_t kj : map->row_dims())
    if (kj >= n)
      raise(Errc::row_dimension_overflow,
            "row dimension " + std::to_string(kj) + " >= n = " + std::to_string(n));

  auto sch = std::shared_ptr<ProjectionScheme>(new ProjectionScheme());
  sch->code_ = std::move(code);
  sch->map_ = std::move(map);

  std::vector<std::size_t> used_sizes;
  used_sizes.reserve(m);
  for (const auto& s : sch->map_->sets()) used_sizes.push_back(s.size());
  sch->radius_ = projection_radius_construction(n, k, l, m, used_sizes);
  const Int fl = floor_rat(sch->radius_);
  sch->radius_floor_ = fl < 0 ? 0 : fl.convert_to<std::size_t>();

  // Column weights: for column i and row j, the powers of p_j(alpha_i)
  // that multiply the expanded coordinates of y_i.
  const FieldCtx* bf = sch->code_->ext()->base().get();
  const auto& alpha = sch->code_->eval_points();
  sch->weights_.assign(m, {});
  for (std::size_t j = 0; j < m; ++j) {
    auto& wj = sch->weights_[j];
    wj.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const felt_t pji = sch->map_->annihilators()[j].evaluate(alpha[i]).index();
      const felt_t step = bf->pow(pji, j + 1);  // p_j(alpha_i)^{j+1}
      auto& w = wj[i];
      w.resize(l - m + 1);
      felt_t acc = 1;
      for (std::size_t u = 0; u + m < l; ++u) {
        w[u] = acc;
        acc = bf->mul(acc, step);
      }
      w[l - m] = acc;  // step^{l-m}
    }
  }
  return sch;
}

Rat ProjectionScheme::alpha() const { return Rat(Int(m()), Int(l())); }

ProjectedWord ProjectionScheme::project_word(std::span<const Xelt> y) const {
  const std::size_t n = code_->n();
  const std::size_t m = map_->m();
  const std::size_t l = map_->l();
  if (y.size() != n) raise(Errc::length_mismatch, "received word must have n symbols");
  const FieldCtx* bf = code_->ext()->base().get();

  ProjectedWord out;
  out.m = m;
  out.n = n;
  out.rows.assign(m, std::vector<felt_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const xcoeffs_t e = code_->ext()->expand(y[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& w = weights_[j][i];
      felt_t acc = 0;
      for (std::size_t u = 0; u + m < l; ++u)
        if (e[u] != 0) acc = bf->add(acc, bf->mul(e[u], w[u]));
      if (e[l - m + j] != 0) acc = bf->add(acc, bf->mul(e[l - m + j], w[l - m]));
      out.rows[j][i] = acc;
    }
  }
  return out;
}

}  // namespace fracrs
