#include <doctest.h>

#include <vector>

#include "fracrs/projection.hpp"
#include "fracrs/recovery.hpp"
#include "fracrs/rng.hpp"
#include "test_support.hpp"

using namespace fracrs;

namespace {

ExtFieldPtr tower(std::uint64_t p, std::uint32_t s, std::uint32_t l) {
  return build_extension(build_field(p, s), l);
}

XPoly random_message(const ExtFieldCtx& E, std::size_t k, Xoshiro256& rng) {
  std::vector<Xelt> c;
  for (std::size_t i = 0; i < k; ++i) c.push_back(E.element(rng.below(E.order())));
  return XPoly(std::move(c));
}

// The four projection schemes exercised throughout the suite.
SchemePtr desk_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(2, 4, 3), 15, 2), 2,
                                std::vector<std::size_t>{1, 1}, std::nullopt);
}
SchemePtr q32_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(2, 5, 5), 31, 4), 3,
                                std::vector<std::size_t>{2, 1, 1}, std::nullopt);
}
SchemePtr homog_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(2, 4, 2), 15, 4), 2,
                                std::vector<std::size_t>{2, 2}, std::nullopt);
}
SchemePtr tiny_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(5, 1, 2), 4, 1), 1, std::nullopt,
                                std::nullopt);
}

}  // namespace

TEST_SUITE_BEGIN("projection");

TEST_CASE("map construction validates sets") {
  ExtFieldPtr E = tower(2, 4, 3);
  using Sets = std::vector<std::vector<felt_t>>;
  CHECK_RAISES(ProjectionMap::make(E, 2, 0, Sets{}), Errc::bad_config);
  CHECK_RAISES(ProjectionMap::make(E, 2, 4, Sets{{0}, {1}, {2}, {3}}), Errc::bad_config);
  CHECK_RAISES(ProjectionMap::make(E, 2, 2, Sets{{0}}), Errc::bad_config);
  CHECK_RAISES(ProjectionMap::make(E, 2, 2, Sets{{0}, {16}}), Errc::bad_config);
  CHECK_RAISES(ProjectionMap::make(E, 2, 2, Sets{{0, 1}, {1}}), Errc::sets_not_disjoint);
  CHECK_RAISES(ProjectionMap::make(E, 3, 2, Sets{{0}, {1}}), Errc::insufficient_sets);
  CHECK_RAISES(ProjectionMap::make(nullptr, 2, 2, Sets{{0}, {1}}), Errc::bad_config);
}

TEST_CASE("row degree bounds follow the set sizes") {
  ExtFieldPtr E = tower(2, 4, 3);
  ProjectionMapPtr M = ProjectionMap::make(E, 2, 2, {{0}, {1}});
  CHECK(M->row_dims() == std::vector<std::size_t>{3, 4});
  CHECK(M->annihilators()[0] == FPoly({E->base()->zero(), E->base()->one()}));  // x - 0
}

TEST_CASE("worked micro example: constant message over the F_4 tower") {
  // l = 2, m = 1, k = 1, A_0 = {1}. For h = w (primitive cube root):
  // trace components are h_0 = h_1 = 1, so T_0 = 1*(x-1) + 1 = x.
  ExtFieldPtr E = tower(2, 1, 2);
  ProjectionMapPtr M = ProjectionMap::make(E, 1, 1, {{1}});
  const XPoly h = XPoly::constant(E->element(2));  // w

  const std::vector<FPoly> comps = M->trace_components(h);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == FPoly::constant(E->base()->one()));
  CHECK(comps[1] == FPoly::constant(E->base()->one()));

  const std::vector<FPoly> rows = M->project_poly(h);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == FPoly({E->base()->zero(), E->base()->one()}));  // x

  // And the recovery side walks it back.
  const auto rec = recover_components(*M, rows);
  REQUIRE(rec.ok());
  CHECK(reassemble(*E, rec.value()) == h);
}

TEST_CASE("trace components recombine to the message") {
  for (const SchemePtr& S : {desk_scheme(), q32_scheme(), homog_scheme(), tiny_scheme()}) {
    const ProjectionMap& M = *S->map();
    Xoshiro256 rng = derive_stream(53, {M.ext()->order()});
    for (int iter = 0; iter < 50; ++iter) {
      const XPoly h = random_message(*M.ext(), M.k(), rng);
      const std::vector<FPoly> comps = M.trace_components(h);
      REQUIRE(comps.size() == M.l());
      for (const FPoly& c : comps) CHECK(c.degree_less(M.k()));
      CHECK(reassemble(*M.ext(), comps) == h);
    }
  }
}

TEST_CASE("projected row polynomials respect the degree bounds") {
  for (const SchemePtr& S : {desk_scheme(), q32_scheme(), homog_scheme(), tiny_scheme()}) {
    const ProjectionMap& M = *S->map();
    Xoshiro256 rng = derive_stream(59, {M.ext()->order()});
    for (int iter = 0; iter < 50; ++iter) {
      const XPoly h = random_message(*M.ext(), M.k(), rng);
      const std::vector<FPoly> rows = M.project_poly(h);
      REQUIRE(rows.size() == M.m());
      for (std::size_t j = 0; j < rows.size(); ++j)
        CHECK(rows[j].degree_less(M.row_dims()[j]));
    }
  }
  // Degree bound enforced, and foreign-context coefficients rejected.
  ExtFieldPtr other = tower(2, 4, 3);
  CHECK_RAISES(desk_scheme()->map()->project_poly(
                   XPoly({other->element(1), other->element(2), other->element(3)})),
               Errc::degree_too_high);
  CHECK_RAISES(desk_scheme()->map()->project_poly(XPoly({other->element(5)})),
               Errc::field_mismatch);
}

TEST_CASE("degenerate full-download case: rows are the trace components") {
  // m = l makes every annihilator power vanish from the formula.
  SchemePtr S = homog_scheme();
  const ProjectionMap& M = *S->map();
  REQUIRE(M.m() == M.l());
  Xoshiro256 rng = derive_stream(61, {});
  for (int iter = 0; iter < 50; ++iter) {
    const XPoly h = random_message(*M.ext(), M.k(), rng);
    CHECK(M.project_poly(h) == M.trace_components(h));
  }
}

TEST_CASE("scheme construction draws default sets from the enumeration") {
  SchemePtr desk = desk_scheme();
  REQUIRE(desk->map()->sets().size() == 2);
  CHECK(desk->map()->sets()[0][0].index() == 0);
  CHECK(desk->map()->sets()[1][0].index() == 1);

  // Default sizes are ceil(k/m) each and sets continue past used elements.
  SchemePtr homog = ProjectionScheme::make(CodeSpec::make(tower(2, 4, 2), 15, 4), 2,
                                           std::nullopt, std::nullopt);
  std::vector<std::vector<felt_t>> got;
  for (const auto& set : homog->map()->sets()) {
    got.emplace_back();
    for (const Felt& w : set) got.back().push_back(w.index());
  }
  CHECK(got == std::vector<std::vector<felt_t>>{{0, 1}, {2, 3}});
}

TEST_CASE("scheme construction rejects invalid combos") {
  CodeSpecPtr C = CodeSpec::make(tower(5, 1, 2), 4, 3);
  // Both sizes and explicit sets.
  CHECK_RAISES(ProjectionScheme::make(C, 1, std::vector<std::size_t>{3},
                                      std::vector<std::vector<felt_t>>{{0, 1, 2}}),
               Errc::bad_config);
  // Row dimension k_0 = 3 + 3*1*1 = 6 > n = 4.
  CHECK_RAISES(ProjectionScheme::make(C, 1, std::vector<std::size_t>{3}, std::nullopt),
               Errc::row_dimension_overflow);
  // m = 2, l = 2 keeps k_j = k, but F_5 cannot host two disjoint 3-sets... it can
  // host {0,1,2} and {3,4} only if sizes fit; sizes (3,3) need 6 elements.
  CHECK_RAISES(ProjectionScheme::make(C, 2, std::vector<std::size_t>{3, 3}, std::nullopt),
               Errc::bad_config);
}

TEST_CASE("word projection agrees with polynomial projection on codewords") {
  for (const SchemePtr& S : {desk_scheme(), q32_scheme(), homog_scheme(), tiny_scheme()}) {
    const ProjectionMap& M = *S->map();
    Xoshiro256 rng = derive_stream(67, {M.ext()->order()});
    for (int iter = 0; iter < 30; ++iter) {
      const XPoly h = random_message(*M.ext(), M.k(), rng);
      const std::vector<Xelt> y = S->code()->encode(h);
      const ProjectedWord Y = S->project_word(y);
      REQUIRE(Y.m == S->m());
      REQUIRE(Y.n == S->n());
      const std::vector<FPoly> rows = M.project_poly(h);
      for (std::size_t j = 0; j < Y.m; ++j)
        for (std::size_t i = 0; i < Y.n; ++i)
          CHECK(Y.rows[j][i] == rows[j].evaluate(S->code()->eval_points()[i]).index());
    }
  }
}

TEST_CASE("word projection is linear") {
  SchemePtr S = desk_scheme();
  const ExtFieldCtx& E = *S->code()->ext();
  const FieldCtx& F = *E.base();
  Xoshiro256 rng = derive_stream(71, {});
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Xelt> a, b, sum;
    for (std::size_t i = 0; i < S->n(); ++i) {
      a.push_back(E.element(rng.below(E.order())));
      b.push_back(E.element(rng.below(E.order())));
      sum.push_back(a.back() + b.back());
    }
    const ProjectedWord Pa = S->project_word(a), Pb = S->project_word(b),
                        Ps = S->project_word(sum);
    for (std::size_t j = 0; j < Ps.m; ++j)
      for (std::size_t i = 0; i < Ps.n; ++i)
        CHECK(Ps.rows[j][i] == F.add(Pa.rows[j][i], Pb.rows[j][i]));
  }

  CHECK_RAISES(S->project_word(std::vector<Xelt>(3, E.zero())), Errc::length_mismatch);
}

TEST_CASE("scheme radius matches the construction formula") {
  SchemePtr desk = desk_scheme();
  CHECK(desk->radius_exact() == Rat(23, 3));
  CHECK(desk->radius() == 7);
  CHECK(desk->alpha() == Rat(2, 3));

  SchemePtr q32 = q32_scheme();
  CHECK(q32->radius_exact() == Rat(67, 4));
  CHECK(q32->radius() == 16);
  CHECK(q32->alpha() == Rat(3, 5));
}

TEST_SUITE_END();
