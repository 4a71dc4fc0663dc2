#include <doctest.h>

#include <vector>

#include "fracrs/recovery.hpp"
#include "fracrs/rng.hpp"
#include "test_support.hpp"

using namespace fracrs;

namespace {

ExtFieldPtr tower(std::uint64_t p, std::uint32_t s, std::uint32_t l) {
  return build_extension(build_field(p, s), l);
}

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

XPoly random_message(const ExtFieldCtx& E, std::size_t k, Xoshiro256& rng) {
  std::vector<Xelt> c;
  for (std::size_t i = 0; i < k; ++i) c.push_back(E.element(rng.below(E.order())));
  return XPoly(std::move(c));
}

std::vector<Xelt> random_error(const CodeSpec& code, std::size_t t, Xoshiro256& rng) {
  const ExtFieldCtx& E = *code.ext();
  std::vector<std::size_t> idx(code.n());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<Xelt> e(code.n(), E.zero());
  for (std::size_t i = 0; i < t; ++i)
    e[idx[i]] = E.element(1 + rng.below(E.order() - 1));
  return e;
}

}  // namespace

TEST_SUITE_BEGIN("recovery");

TEST_CASE("component recovery inverts polynomial projection") {
  for (const SchemePtr& S : {desk_scheme(), q32_scheme(), homog_scheme(), tiny_scheme()}) {
    const ProjectionMap& M = *S->map();
    Xoshiro256 rng = derive_stream(109, {M.ext()->order()});
    for (int iter = 0; iter < 100; ++iter) {
      const XPoly h = random_message(*M.ext(), M.k(), rng);
      const auto rec = recover_components(M, M.project_poly(h));
      REQUIRE(rec.ok());
      CHECK(rec.value() == M.trace_components(h));
      CHECK(reassemble(*M.ext(), rec.value()) == h);
    }
  }
}

TEST_CASE("recovery rejects rows that break the degree bound") {
  SchemePtr S = desk_scheme();
  const ProjectionMap& M = *S->map();
  const FieldCtx& F = *M.ext()->base();
  Xoshiro256 rng = derive_stream(113, {});
  const XPoly h = random_message(*M.ext(), M.k(), rng);
  std::vector<FPoly> rows = M.project_poly(h);

  // Row 0 has bound k_0 = 3; blow it up to degree 3.
  rows[0] = rows[0] + FPoly({F.zero(), F.zero(), F.zero(), F.one()});
  const auto rec = recover_components(M, rows);
  REQUIRE_FALSE(rec.ok());
  CHECK(rec.failure().reason == FailureReason::degree_bound);

  CHECK_RAISES((void)recover_components(M, std::vector<FPoly>{rows[0]}),
               Errc::length_mismatch);
}

TEST_CASE("recovery flags corruption outside the projection image") {
  // Desk parameters: k_0 + k_1 = 7 row coefficients carry a 6-dimensional
  // image, so exactly one corruption direction is detectable. Adding a
  // constant to row 0 realizes it: the shared h_0 gets re-interpolated with
  // a (x+1) offset, and row 1 then fails the division by (x-1)^2.
  SchemePtr S = desk_scheme();
  const ProjectionMap& M = *S->map();
  const FieldCtx& F = *M.ext()->base();
  Xoshiro256 rng = derive_stream(127, {});
  const XPoly h = random_message(*M.ext(), M.k(), rng);
  std::vector<FPoly> rows = M.project_poly(h);

  rows[0] = rows[0] + FPoly::constant(F.one());
  const auto rec = recover_components(M, rows);
  REQUIRE_FALSE(rec.ok());
  CHECK(rec.failure().reason == FailureReason::inexact_division);
}

TEST_CASE("in-image corruption recovers the alternative message") {
  // Adding x^2 to row 0 IS the projection of a different message
  // (h + nu_1 x): recovery cannot and does not flag it.
  SchemePtr S = desk_scheme();
  const ProjectionMap& M = *S->map();
  const ExtFieldCtx& E = *M.ext();
  const FieldCtx& F = *E.base();
  Xoshiro256 rng = derive_stream(149, {});
  const XPoly h = random_message(E, M.k(), rng);
  std::vector<FPoly> rows = M.project_poly(h);

  rows[0] = rows[0] + FPoly({F.zero(), F.zero(), F.one()});
  const auto rec = recover_components(M, rows);
  REQUIRE(rec.ok());
  const XPoly expected = h + XPoly({E.zero(), E.nu()[1]});
  CHECK(reassemble(E, rec.value()) == expected);
}

TEST_CASE("reassembly needs exactly l components") {
  ExtFieldPtr E = tower(2, 4, 3);
  const FPoly one = FPoly::constant(E->base()->one());
  CHECK_RAISES(reassemble(*E, std::vector<FPoly>{one, one}), Errc::length_mismatch);
}

TEST_CASE("end-to-end decoding corrects symbol errors up to the radius") {
  for (const SchemePtr& S : {desk_scheme(), q32_scheme()}) {
    Xoshiro256 rng = derive_stream(131, {S->n()});
    for (std::size_t t = 0; t <= S->radius(); t += 2) {
      const XPoly h = random_message(*S->code()->ext(), S->k(), rng);
      std::vector<Xelt> y = S->code()->encode(h);
      const std::vector<Xelt> e = random_error(*S->code(), t, rng);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + e[i];

      const auto res = fractional_decode(S, S->project_word(y));
      REQUIRE_MESSAGE(res.ok(), "t=", t);
      CHECK(res.value().message == h);
      CHECK(res.value().components.size() == S->l());
      // t counts corrected *projected* columns, which the trace kernel can
      // only shrink.
      CHECK(res.value().t <= t);
    }
  }
}

TEST_CASE("failures beyond the radius are detected and tagged") {
  SchemePtr S = desk_scheme();
  Xoshiro256 rng = derive_stream(137, {});
  const XPoly h = random_message(*S->code()->ext(), S->k(), rng);
  std::vector<Xelt> y = S->code()->encode(h);
  const std::vector<Xelt> e = random_error(*S->code(), 12, rng);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + e[i];

  const auto res = fractional_decode(S, S->project_word(y));
  REQUIRE_FALSE(res.ok());
  CHECK(failure_tag(res.failure().reason) == std::string("no_solution"));
}

TEST_CASE("decode options control the self-check") {
  SchemePtr S = desk_scheme();
  Xoshiro256 rng = derive_stream(139, {});
  const XPoly h = random_message(*S->code()->ext(), S->k(), rng);
  const ProjectedWord Y = S->project_word(S->code()->encode(h));
  for (const bool self_check : {true, false}) {
    DecodeOptions opts;
    opts.self_check = self_check;
    const auto res = fractional_decode(S, Y, opts);
    REQUIRE(res.ok());
    CHECK(res.value().message == h);
    CHECK(res.value().t == 0);
  }
}

TEST_SUITE_END();
