#include "fracrs/recovery.hpp"

namespace fracrs {

Outcome<std::vector<FPoly>> recover_components(const ProjectionMap& map,
                                               std::span<const FPoly> row_polys) {
  const std::size_t m = map.m();
  const std::size_t l = map.l();
  const std::size_t k = map.k();
  if (row_polys.size() != m) raise(Errc::length_mismatch, "need one polynomial per row");

  for (std::size_t j = 0; j < m; ++j)
    if (!row_polys[j].degree_less(map.row_dims()[j]))
      return DecodeFailure{FailureReason::degree_bound,
                           "row polynomial exceeds its dimension bound"};

  std::vector<FPoly> T(row_polys.begin(), row_polys.end());
  std::vector<FPoly> comps(l);

  // p_j^{j+1}, the divisor peeled off row j at each step.
  std::vector<FPoly> step(m);
  for (std::size_t j = 0; j < m; ++j) step[j] = map.annihilators()[j].powed(j + 1);

  std::vector<Felt> xs, ys;
  for (std::size_t u = 0; u + m < l; ++u) {  // u = 0 .. l-m-1
    xs.clear();
    ys.clear();
    for (std::size_t j = 0; j < m; ++j)
      for (const Felt& w : map.sets()[j]) {
        xs.push_back(w);
        ys.push_back(T[j].evaluate(w));
      }
    FPoly hu = FPoly::interpolate(xs, ys);
    if (!hu.degree_less(k))
      return DecodeFailure{FailureReason::degree_bound,
                           "recovered component exceeds the message degree bound"};
    try {
      for (std::size_t j = 0; j < m; ++j) T[j] = (T[j] - hu).exact_div(step[j]);
    } catch (const Error& e) {
      if (e.code() == Errc::inexact_division)
        return DecodeFailure{FailureReason::inexact_division,
                             "row residue not divisible by its annihilator power"};
      throw;
    }
    comps[u] = std::move(hu);
  }

  for (std::size_t j = 0; j < m; ++j) {
    if (!T[j].degree_less(k))
      return DecodeFailure{FailureReason::degree_bound,
                           "recovered component exceeds the message degree bound"};
    comps[l - m + j] = std::move(T[j]);
  }
  return comps;
}

XPoly reassemble(const ExtFieldCtx& ext, std::span<const FPoly> components) {
  if (components.size() != ext.l())
    raise(Errc::length_mismatch, "need exactly l component polynomials");
  XPoly h;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Xelt& nu = ext.nu()[i];
    std::vector<Xelt> lifted;
    lifted.reserve(components[i].coeffs().size());
    for (const Felt& c : components[i].coeffs()) lifted.push_back(ext.embed(c) * nu);
    h = h + XPoly(std::move(lifted));
  }
  return h;
}

Outcome<RecoveredMessage> fractional_decode(const SchemePtr& scheme, const ProjectedWord& Y,
                                            const DecodeOptions& opts) {
  auto corrected = collaborative_decode(scheme, Y);
  if (!corrected.ok()) return corrected.failure();

  const FieldCtx* bf = scheme->code()->ext()->base().get();
  const auto& alpha = scheme->code()->eval_points();
  const std::size_t m = scheme->m();

  std::vector<FPoly> row_polys;
  row_polys.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Felt> ys;
    ys.reserve(alpha.size());
    for (felt_t v : corrected.value().word.rows[j]) ys.emplace_back(bf, v);
    FPoly rp = FPoly::interpolate(alpha, ys);
    if (!rp.degree_less(scheme->row_dims()[j]))
      return DecodeFailure{FailureReason::degree_bound,
                           "corrected row does not interpolate below its dimension"};
    row_polys.push_back(std::move(rp));
  }

  auto comps = recover_components(*scheme->map(), row_polys);
  if (!comps.ok()) return comps.failure();

  XPoly h = reassemble(*scheme->code()->ext(), comps.value());

  if (opts.self_check) {
    const std::vector<Xelt> cw = scheme->code()->encode(h);
    const ProjectedWord again = scheme->project_word(cw);
    if (again.rows != corrected.value().word.rows)
      return DecodeFailure{FailureReason::self_check_mismatch,
                           "re-projected recovery disagrees with the corrected rows"};
  }

  return RecoveredMessage{std::move(h), std::move(comps.value()), corrected.value().t};
}

}  // namespace fracrs
