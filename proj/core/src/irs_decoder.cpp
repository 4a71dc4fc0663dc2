#include "fracrs/irs_decoder.hpp"

#include <optional>
#include <utility>

namespace fracrs {

namespace {

struct LinSolution {
  bool consistent = false;
  std::vector<felt_t> particular;              // free variables set to zero
  std::vector<std::vector<felt_t>> nullspace;  // one basis vector per free column
};

// Reduced row echelon form over F_q with first-nonzero pivoting; returns the
// particular solution and a nullspace basis in ascending free-column order.
LinSolution gauss_solve(const FieldCtx& F, std::vector<std::vector<felt_t>> M,
                        std::vector<felt_t> rhs, std::size_t ncols) {
  const std::size_t nrows = M.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t sel = rank;
    while (sel < nrows && M[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(M[sel], M[rank]);
    std::swap(rhs[sel], rhs[rank]);
    const felt_t s = F.inv(M[rank][col]);
    for (std::size_t j = col; j < ncols; ++j) M[rank][j] = F.mul(M[rank][j], s);
    rhs[rank] = F.mul(rhs[rank], s);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      const felt_t f = M[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        M[r][j] = F.sub(M[r][j], F.mul(f, M[rank][j]));
      rhs[r] = F.sub(rhs[r], F.mul(f, rhs[rank]));
    }
    pivot_col.push_back(col);
    ++rank;
  }

  LinSolution sol;
  for (std::size_t r = rank; r < nrows; ++r)
    if (rhs[r] != 0) return sol;  // inconsistent
  sol.consistent = true;

  sol.particular.assign(ncols, 0);
  for (std::size_t r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = rhs[r];

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<felt_t> v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = F.neg(M[r][f]);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace

SyndromeSet syndromes(const SchemePtr& scheme, const ProjectedWord& Y) {
  if (!scheme) raise(Errc::bad_config, "null scheme");
  const std::size_t n = scheme->n();
  const std::size_t m = scheme->m();
  if (Y.m != m || Y.rows.size() != m || Y.n != n)
    raise(Errc::length_mismatch, "projected word has wrong dimensions");
  const FieldCtx* bf = scheme->code()->ext()->base().get();
  const std::uint64_t q = bf->order();
  const auto& alpha = scheme->code()->eval_points();
  const auto& u = scheme->code()->dual_multipliers();

  SyndromeSet out;
  out.scheme = scheme;
  out.rows.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (Y.rows[j].size() != n) raise(Errc::length_mismatch, "projected row has wrong length");
    const std::size_t cnt = n > scheme->row_dims()[j] ? n - scheme->row_dims()[j] : 0;
    std::vector<felt_t> s(cnt, 0);
    for (std::size_t h = 0; h < n; ++h) {
      const felt_t yv = Y.rows[j][h];
      if (yv >= q) raise(Errc::bad_config, "projected entry is not a base-field element");
      if (yv == 0) continue;
      felt_t c = bf->mul(yv, u[h].index());
      const felt_t a = alpha[h].index();
      for (std::size_t i = 0; i < cnt; ++i) {
        s[i] = bf->add(s[i], c);
        c = bf->mul(c, a);
      }
    }
    out.rows[j].reserve(cnt);
    for (felt_t v : s) out.rows[j].emplace_back(bf, v);
  }
  return out;
}

Outcome<LocatorResult> solve_key_equation(const SyndromeSet& synd, std::size_t t_max) {
  if (!synd.scheme) raise(Errc::bad_config, "syndrome set has no scheme");
  const auto& scheme = *synd.scheme;
  const FieldCtx* bf = scheme.code()->ext()->base().get();
  const Felt one = bf->one();

  if (synd.all_zero()) return LocatorResult{0, FPoly::constant(one), {}};

  const auto& L = scheme.code()->eval_points();
  bool saw_consistent = false;

  for (std::size_t t = 1; t <= t_max; ++t) {
    std::vector<std::vector<felt_t>> M;
    std::vector<felt_t> rhs;
    for (const auto& srow : synd.rows) {
      if (srow.size() < t + 1) continue;
      const std::size_t shifts = srow.size() - t;  // v = 1..n-k_j-t
      for (std::size_t v = 1; v <= shifts; ++v) {
        std::vector<felt_t> row(t);
        for (std::size_t i = 1; i <= t; ++i) row[i - 1] = srow[v + t - i - 1].index();
        M.push_back(std::move(row));
        rhs.push_back(bf->neg(srow[v + t - 1].index()));
      }
    }

    const LinSolution sol = gauss_solve(*bf, std::move(M), std::move(rhs), t);
    if (!sol.consistent) continue;
    saw_consistent = true;

    std::vector<std::vector<felt_t>> candidates;
    candidates.push_back(sol.particular);
    for (const auto& nv : sol.nullspace) {
      std::vector<felt_t> c = sol.particular;
      for (std::size_t i = 0; i < t; ++i) c[i] = bf->add(c[i], nv[i]);
      candidates.push_back(std::move(c));
    }

    for (const auto& cand : candidates) {
      // Lambda(x) = x^t + Lambda_1 x^{t-1} + ... + Lambda_t, constant first.
      std::vector<Felt> coeffs(t + 1, one);
      for (std::size_t w = 0; w < t; ++w) coeffs[w] = Felt(bf, cand[t - w - 1]);
      FPoly lambda(std::move(coeffs));
      std::vector<std::size_t> roots = lambda.roots_in(std::span<const Felt>(L));
      if (roots.size() == t) return LocatorResult{t, std::move(lambda), std::move(roots)};
    }
  }

  return DecodeFailure{saw_consistent ? FailureReason::not_t_valid : FailureReason::no_solution,
                       saw_consistent ? "no key-equation solution had a t-valid locator"
                                      : "key equation inconsistent at every error count"};
}

Outcome<ErrorMatrix> error_values(const ProjectionScheme& scheme, const SyndromeSet& synd,
                                  const LocatorResult& loc) {
  const std::size_t n = scheme.n();
  const std::size_t m = scheme.m();
  const std::size_t t = loc.t;
  const FieldCtx* bf = scheme.code()->ext()->base().get();

  for (const auto& srow : synd.rows)
    if (srow.size() < t)
      return DecodeFailure{FailureReason::row_underdetermined,
                           "a row has fewer syndromes than located errors"};

  ErrorMatrix out;
  out.m = m;
  out.n = n;
  out.rows.assign(m, std::vector<felt_t>(n, 0));

  if (t == 0) {
    if (!synd.all_zero())
      return DecodeFailure{FailureReason::inconsistent,
                           "nonzero syndromes with an empty error support"};
    return out;
  }

  const auto& alpha = scheme.code()->eval_points();
  const auto& u = scheme.code()->dual_multipliers();

  // Column e of the system is the geometric sequence u_e alpha_e^i; rows are
  // shared across the m right-hand sides (one per projected row).
  std::vector<felt_t> base_coef(t), ratio(t);
  for (std::size_t e = 0; e < t; ++e) {
    const std::size_t pos = loc.positions[e];
    base_coef[e] = u[pos].index();
    ratio[e] = alpha[pos].index();
  }

  // Solve the square top t x t block by elimination on an augmented matrix
  // with one RHS column per row of the projected word.
  std::vector<std::vector<felt_t>> aug(t, std::vector<felt_t>(t + m, 0));
  {
    std::vector<felt_t> coef = base_coef;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t e = 0; e < t; ++e) {
        aug[i][e] = coef[e];
        coef[e] = bf->mul(coef[e], ratio[e]);
      }
      for (std::size_t j = 0; j < m; ++j) aug[i][t + j] = synd.rows[j][i].index();
    }
  }
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t sel = col;
    while (sel < t && aug[sel][col] == 0) ++sel;
    if (sel == t)
      raise(Errc::unsupported, "singular error-value system for distinct located positions");
    std::swap(aug[sel], aug[col]);
    const felt_t s = bf->inv(aug[col][col]);
    for (std::size_t j = col; j < t + m; ++j) aug[col][j] = bf->mul(aug[col][j], s);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const felt_t f = aug[r][col];
      for (std::size_t j = col; j < t + m; ++j)
        aug[r][j] = bf->sub(aug[r][j], bf->mul(f, aug[col][j]));
    }
  }

  // Leftover syndrome equations of each row must agree with the solution.
  for (std::size_t j = 0; j < m; ++j) {
    const auto& srow = synd.rows[j];
    std::vector<felt_t> coef(t);
    for (std::size_t e = 0; e < t; ++e) coef[e] = bf->mul(base_coef[e], bf->pow(ratio[e], t));
    for (std::size_t i = t; i < srow.size(); ++i) {
      felt_t acc = 0;
      for (std::size_t e = 0; e < t; ++e) {
        acc = bf->add(acc, bf->mul(coef[e], aug[e][t + j]));
        coef[e] = bf->mul(coef[e], ratio[e]);
      }
      if (acc != srow[i].index())
        return DecodeFailure{FailureReason::inconsistent,
                             "leftover syndrome equation violated by the error values"};
    }
    for (std::size_t e = 0; e < t; ++e) out.rows[j][loc.positions[e]] = aug[e][t + j];
  }
  return out;
}

Outcome<CorrectedWord> collaborative_decode(const SchemePtr& scheme, const ProjectedWord& Y) {
  const SyndromeSet synd = syndromes(scheme, Y);
  if (synd.all_zero()) return CorrectedWord{Y, 0};

  auto loc = solve_key_equation(synd, scheme->radius());
  if (!loc.ok()) return loc.failure();

  auto errs = error_values(*scheme, synd, loc.value());
  if (!errs.ok()) return errs.failure();

  const FieldCtx* bf = scheme->code()->ext()->base().get();
  CorrectedWord out;
  out.t = loc.value().t;
  out.word = Y;
  for (std::size_t j = 0; j < out.word.rows.size(); ++j)
    for (std::size_t i = 0; i < out.word.rows[j].size(); ++i)
      out.word.rows[j][i] = bf->sub(out.word.rows[j][i], errs.value().rows[j][i]);
  return out;
}

}  // namespace fracrs
