#include <doctest.h>

#include <vector>

#include "fracrs/fields.hpp"
#include "fracrs/polynomials.hpp"
#include "fracrs/rng.hpp"
#include "test_support.hpp"

using namespace fracrs;

namespace {

FPoly random_poly(const FieldPtr& F, std::size_t max_deg, Xoshiro256& rng) {
  std::vector<Felt> c;
  const std::size_t len = 1 + static_cast<std::size_t>(rng.below(max_deg + 1));
  c.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    c.push_back(F->element(rng.below(F->order())));
  return FPoly(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("polynomials");

TEST_CASE("construction trims leading zeros") {
  FieldPtr F = build_field(5, 1);
  const FPoly p({F->element(1), F->element(2), F->zero(), F->zero()});
  REQUIRE(p.degree().has_value());
  CHECK(*p.degree() == 1);
  CHECK(p.coeff(0) == F->element(1));
  CHECK(p.coeff(1) == F->element(2));

  const FPoly zero;
  CHECK_FALSE(zero.degree().has_value());
  CHECK(zero == FPoly({F->zero(), F->zero()}));
  CHECK(zero.degree_less(0));
  CHECK(zero.evaluate(F->element(3)) == F->zero());
}

TEST_CASE("arithmetic matches hand-checked values over F_5") {
  FieldPtr F = build_field(5, 1);
  auto e = [&](felt_t v) { return F->element(v); };
  const FPoly a({e(1), e(2)});  // 1 + 2x
  const FPoly b({e(3), e(1)});  // 3 + x
  CHECK(a + b == FPoly({e(4), e(3)}));
  CHECK(a - b == FPoly({e(3), e(1)}));
  CHECK(a * b == FPoly({e(3), e(2), e(2)}));  // 3 + 7x + 2x^2
  CHECK(-a == FPoly({e(4), e(3)}));
  CHECK(a.scaled(e(2)) == FPoly({e(2), e(4)}));
  CHECK(a.shifted_up(2) == FPoly({e(0), e(0), e(1), e(2)}));
  CHECK(a.evaluate(e(2)) == e(0));  // 1 + 4 = 5 = 0
}

TEST_CASE("powers") {
  FieldPtr F = build_field(2, 1);
  const FPoly xp1({F->one(), F->one()});
  CHECK(xp1.powed(2) == FPoly({F->one(), F->zero(), F->one()}));  // x^2 + 1 in char 2
  CHECK(xp1.powed(0) == FPoly::constant(F->one()));
  CHECK_RAISES(FPoly{}.powed(0), Errc::zero_polynomial);
  CHECK(FPoly{}.powed(3) == FPoly{});
}

TEST_CASE("division with remainder is exact over random inputs") {
  FieldPtr F = build_field(5, 2);
  Xoshiro256 rng = derive_stream(23, {});
  for (int iter = 0; iter < 300; ++iter) {
    const FPoly a = random_poly(F, 10, rng);
    FPoly b = random_poly(F, 5, rng);
    if (b == FPoly{}) b = FPoly::constant(F->one());
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    if (r.degree().has_value()) {
      REQUIRE(b.degree().has_value());
      CHECK(*r.degree() < *b.degree());
    }
  }
  CHECK_RAISES(random_poly(F, 3, rng).divmod(FPoly{}), Errc::division_by_zero);
}

TEST_CASE("exact division raises on nonzero remainder") {
  FieldPtr F = build_field(2, 4);
  Xoshiro256 rng = derive_stream(29, {});
  for (int iter = 0; iter < 100; ++iter) {
    const FPoly a = random_poly(F, 6, rng);
    FPoly b = random_poly(F, 4, rng);
    while (!b.degree().has_value() || *b.degree() < 1) b = random_poly(F, 4, rng);
    CHECK((a * b).exact_div(b) == a);
    CHECK_RAISES((a * b + FPoly::constant(F->one())).exact_div(b), Errc::inexact_division);
  }
}

TEST_CASE("evaluation agrees with the naive power sum") {
  FieldPtr F = build_field(2, 5);
  Xoshiro256 rng = derive_stream(31, {});
  for (int iter = 0; iter < 100; ++iter) {
    const FPoly a = random_poly(F, 8, rng);
    const Felt x = F->element(rng.below(F->order()));
    Felt want = F->zero(), xp = F->one();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      want += a.coeff(i) * xp;
      xp *= x;
    }
    CHECK(a.evaluate(x) == want);
  }
}

TEST_CASE("interpolation inverts evaluation") {
  FieldPtr F = build_field(2, 4);
  Xoshiro256 rng = derive_stream(37, {});
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.below(8));
    std::vector<Felt> coeffs;
    for (std::size_t i = 0; i < k; ++i) coeffs.push_back(F->element(rng.below(16)));
    const FPoly h{coeffs};

    // k distinct points.
    std::vector<Felt> xs;
    std::vector<felt_t> pool{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
      xs.push_back(F->element(pool[i]));
    }
    std::vector<Felt> ys;
    for (const Felt& x : xs) ys.push_back(h.evaluate(x));
    CHECK(FPoly::interpolate(xs, ys) == h);
  }
}

TEST_CASE("interpolation validates its inputs") {
  FieldPtr F = build_field(5, 1);
  const std::vector<Felt> xs{F->element(1), F->element(2)};
  const std::vector<Felt> ys{F->element(3)};
  CHECK_RAISES(FPoly::interpolate(xs, ys), Errc::length_mismatch);
  CHECK_RAISES(FPoly::interpolate(std::vector<Felt>{}, std::vector<Felt>{}),
               Errc::bad_config);
  const std::vector<Felt> dup{F->element(1), F->element(1)};
  const std::vector<Felt> ys2{F->element(3), F->element(4)};
  CHECK_RAISES(FPoly::interpolate(dup, ys2), Errc::duplicate_abscissa);
}

TEST_CASE("root location among candidate points") {
  FieldPtr F = build_field(5, 1);
  auto e = [&](felt_t v) { return F->element(v); };
  // (x - 1)(x - 3) = x^2 - 4x + 3 = 3 + x + x^2 mod 5
  const FPoly p({e(3), e(1), e(1)});
  const std::vector<Felt> pts{e(1), e(2), e(3), e(4)};
  CHECK(p.roots_in(pts) == std::vector<std::size_t>{0, 2});
  CHECK(FPoly::constant(e(2)).roots_in(pts).empty());
  CHECK_RAISES(FPoly{}.roots_in(pts), Errc::zero_polynomial);
}

TEST_CASE("extension-field polynomials use the same machinery") {
  ExtFieldPtr E = build_extension(build_field(2, 4), 3);
  Xoshiro256 rng = derive_stream(41, {});
  const XPoly a({E->element(rng.below(E->order())), E->element(rng.below(E->order()))});
  const XPoly b({E->element(1 + rng.below(E->order() - 1)), E->element(rng.below(E->order())),
                 E->element(1 + rng.below(E->order() - 1))});
  const auto [q, r] = (a * b).divmod(b);
  CHECK(q == a);
  CHECK(r == XPoly{});
}

TEST_SUITE_END();
