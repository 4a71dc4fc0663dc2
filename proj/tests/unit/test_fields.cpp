#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fracrs/fields.hpp"
#include "fracrs/rng.hpp"
#include "test_support.hpp"

using namespace fracrs;

TEST_SUITE_BEGIN("fields");

TEST_CASE("primality testing") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(5));
  CHECK(is_prime_u64(31));
  CHECK(is_prime_u64(2147483647ULL));          // 2^31 - 1
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(15));
  CHECK_FALSE(is_prime_u64(1ULL << 40));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("base-field construction rejects bad parameters") {
  CHECK_RAISES(FieldCtx::make(4, 1), Errc::not_prime);
  CHECK_RAISES(FieldCtx::make(1, 1), Errc::not_prime);
  CHECK_RAISES(FieldCtx::make(2, 0), Errc::bad_config);
  // x^2 + 1 = (x + 1)^2 over F_2.
  CHECK_RAISES(FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}),
               Errc::not_irreducible);
  // Wrong degree for the declared s.
  CHECK_RAISES(FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 1}), Errc::bad_config);
  // Not monic.
  CHECK_RAISES(FieldCtx::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}), Errc::bad_config);
  // Coefficient out of range.
  CHECK_RAISES(FieldCtx::make(3, 2, std::vector<std::uint32_t>{5, 0, 1}), Errc::bad_config);
}

TEST_CASE("canonical moduli are the smallest irreducible by counting order") {
  CHECK(FieldCtx::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FieldCtx::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(FieldCtx::make(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(FieldCtx::make(2, 5)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1});
  CHECK(FieldCtx::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FieldCtx::make(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(FieldCtx::make(5, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("element enumeration is the little-endian digit encoding") {
  for (auto [p, s] : {std::pair<std::uint64_t, std::uint32_t>{2, 4},
                      {5, 1},
                      {5, 2},
                      {3, 2}}) {
    FieldPtr F = FieldCtx::make(p, s);
    const std::uint64_t q = F->order();
    REQUIRE(q <= 32);
    for (felt_t a = 0; a < q; ++a) {
      const std::vector<std::uint32_t> d = F->digits(a);
      REQUIRE(d.size() == s);
      std::uint64_t enc = 0, w = 1;
      for (std::uint32_t di : d) {
        CHECK(di < p);
        enc += di * w;
        w *= p;
      }
      CHECK(enc == a);
      CHECK(F->from_digits(d).index() == a);
    }
    CHECK(F->zero().index() == 0);
    CHECK(F->one().index() == 1);
    CHECK_RAISES(F->element(q), Errc::bad_config);
  }
}

TEST_CASE("field axioms hold on random triples") {
  for (auto [p, s] : {std::pair<std::uint64_t, std::uint32_t>{2, 2},
                      {2, 4},
                      {2, 5},
                      {5, 1},
                      {5, 2}}) {
    FieldPtr F = FieldCtx::make(p, s);
    const std::uint64_t q = F->order();
    Xoshiro256 rng = derive_stream(7, {p, s});
    for (int iter = 0; iter < 1000; ++iter) {
      const felt_t a = static_cast<felt_t>(rng.below(q));
      const felt_t b = static_cast<felt_t>(rng.below(q));
      const felt_t c = static_cast<felt_t>(rng.below(q));
      CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->sub(a, a) == 0);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, q - 1) == 1);
      }
      CHECK(F->frobenius(a) == F->pow(a, p));
    }
    CHECK_RAISES(F->inv(0), Errc::division_by_zero);
  }
}

TEST_CASE("F_4 arithmetic oracle") {
  // With modulus u^2 + u + 1: index 2 is u, index 3 is u + 1 = u^2.
  FieldPtr F = FieldCtx::make(2, 2);
  const felt_t w = 2, w2 = 3;
  CHECK(F->mul(w, w) == w2);
  CHECK(F->mul(w, w2) == 1);
  CHECK(F->add(w, 1) == w2);
  CHECK(F->inv(w) == w2);
  CHECK(F->pow(w, 3) == 1);
  CHECK(F->frobenius(w) == w2);
}

TEST_CASE("extension tower over F_2 models F_4 with its trace-dual basis") {
  ExtFieldPtr E = build_extension(build_field(2, 1), 2);
  CHECK(E->order() == 4);
  CHECK(E->modulus() == std::vector<felt_t>{1, 1, 1});  // v^2 + v + 1
  CHECK(E->zeta_indices() == std::vector<std::uint64_t>{1, 2});

  const Xelt one = E->element(1), w = E->element(2), w2 = E->element(3);
  CHECK(w * w == w2);
  CHECK(w * w2 == one);
  // Dual basis of {1, w} is {w^2, 1}.
  CHECK(E->nu()[0] == w2);
  CHECK(E->nu()[1] == one);
  // Trace values over F_2: tr(1) = 0, tr(w) = tr(w^2) = 1.
  CHECK(E->trace(E->element(0)).index() == 0);
  CHECK(E->trace(one).index() == 0);
  CHECK(E->trace(w).index() == 1);
  CHECK(E->trace(w2).index() == 1);
}

static ExtFieldPtr tower(std::uint64_t p, std::uint32_t s, std::uint32_t l) {
  return build_extension(build_field(p, s), l);
}

TEST_CASE("dual-basis identity holds across towers") {
  for (ExtFieldPtr E : {tower(2, 1, 2), tower(2, 4, 3), tower(2, 4, 2), tower(2, 5, 5),
                        tower(5, 1, 2), tower(3, 2, 2)}) {
    const std::uint32_t l = E->l();
    for (std::uint32_t i = 0; i < l; ++i)
      for (std::uint32_t j = 0; j < l; ++j) {
        const Felt tr = E->trace(E->zeta()[i] * E->nu()[j]);
        CHECK(tr.index() == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("extension moduli are canonical") {
  CHECK(tower(2, 4, 3)->modulus() == std::vector<felt_t>{2, 0, 0, 1});  // v^3 + u
}

TEST_CASE("expand and recombine are mutually inverse") {
  for (ExtFieldPtr E : {tower(2, 4, 3), tower(2, 5, 5), tower(5, 1, 2), tower(2, 4, 2)}) {
    const std::uint64_t ql = E->order();
    const std::uint64_t q = E->base()->order();
    Xoshiro256 rng = derive_stream(11, {ql});
    for (int iter = 0; iter < 200; ++iter) {
      const Xelt x = E->element(rng.below(ql));
      const xcoeffs_t t = E->expand(x);
      REQUIRE(t.size() == E->l());
      CHECK(E->recombine(std::span<const felt_t>(t.data(), t.size())) == x);

      // Linearity of the coordinate map.
      const Xelt y = E->element(rng.below(ql));
      const xcoeffs_t tx = E->expand(x), ty = E->expand(y), ts = E->expand(x + y);
      for (std::size_t i = 0; i < ts.size(); ++i)
        CHECK(ts[i] == E->base()->add(tx[i], ty[i]));

      // Random coordinate tuples recombine back.
      std::vector<felt_t> u(E->l());
      for (auto& c : u) c = static_cast<felt_t>(rng.below(q));
      CHECK(E->expand(E->recombine(u)) == xcoeffs_t(u.begin(), u.end()));
    }
  }
}

TEST_CASE("trace is additive, Frobenius-invariant, and surjective") {
  for (ExtFieldPtr E : {tower(2, 4, 3), tower(5, 1, 2), tower(2, 5, 5)}) {
    const std::uint64_t ql = E->order();
    const std::uint64_t q = E->base()->order();
    Xoshiro256 rng = derive_stream(13, {ql});
    for (int iter = 0; iter < 200; ++iter) {
      const Xelt x = E->element(rng.below(ql));
      const Xelt y = E->element(rng.below(ql));
      CHECK(E->trace(x + y) == E->trace(x) + E->trace(y));
      CHECK(E->trace(E->frobenius(x)) == E->trace(x));
      CHECK(E->frobenius(x) == pow(x, q));
    }
    // Surjectivity: every base value is some trace.
    std::vector<bool> hit(q, false);
    for (std::uint64_t i = 0; i < ql; ++i) hit[E->trace(E->element(i)).index()] = true;
    for (std::uint64_t c = 0; c < q; ++c) CHECK(hit[c]);
  }
}

TEST_CASE("extension arithmetic axioms on random triples") {
  for (ExtFieldPtr E : {tower(2, 4, 3), tower(2, 5, 5), tower(5, 1, 2)}) {
    const std::uint64_t ql = E->order();
    Xoshiro256 rng = derive_stream(17, {ql});
    const Xelt zero = E->zero(), one = E->one();
    for (int iter = 0; iter < 1000; ++iter) {
      const Xelt a = E->element(rng.below(ql));
      const Xelt b = E->element(rng.below(ql));
      const Xelt c = E->element(rng.below(ql));
      CHECK(a + (b + c) == (a + b) + c);
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a - a == zero);
      if (!a.is_zero()) {
        CHECK(a * inv(a) == one);
        CHECK(pow(a, ql - 1) == one);
      }
    }
    CHECK_RAISES(inv(zero), Errc::division_by_zero);
  }
}

TEST_CASE("embedding respects base arithmetic") {
  ExtFieldPtr E = tower(2, 4, 3);
  const FieldPtr& F = E->base();
  Xoshiro256 rng = derive_stream(19, {});
  for (int iter = 0; iter < 200; ++iter) {
    const Felt a = F->element(rng.below(16));
    const Felt b = F->element(rng.below(16));
    CHECK(E->embed(a) + E->embed(b) == E->embed(a + b));
    CHECK(E->embed(a) * E->embed(b) == E->embed(a * b));
  }
}

TEST_CASE("supplied working basis is validated") {
  // {1, 1} is linearly dependent.
  CHECK_RAISES(build_extension(build_field(2, 1), 2,
                               std::nullopt, std::vector<std::uint64_t>{1, 1}),
               Errc::basis_not_independent);
  // {w, w^2} is a valid F_2-basis of F_4.
  ExtFieldPtr E = build_extension(build_field(2, 1), 2, std::nullopt,
                                  std::vector<std::uint64_t>{2, 3});
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      CHECK(E->trace(E->zeta()[i] * E->nu()[j]).index() == (i == j ? 1 : 0));
}

TEST_CASE("supplied extension modulus is validated") {
  // v^2 + 1 is reducible over F_5 (roots 2 and 3).
  CHECK_RAISES(build_extension(build_field(5, 1), 2, std::vector<felt_t>{1, 0, 1}),
               Errc::not_irreducible);
  // v^2 + 2 works.
  ExtFieldPtr E = build_extension(build_field(5, 1), 2, std::vector<felt_t>{2, 0, 1});
  CHECK(E->order() == 25);
}

TEST_CASE("elements from different contexts do not mix") {
  FieldPtr F1 = build_field(5, 1), F2 = build_field(5, 1);
  CHECK_RAISES(F1->element(2) + F2->element(3), Errc::field_mismatch);
  CHECK_RAISES(Felt{} + Felt{}, Errc::field_mismatch);
  ExtFieldPtr E1 = tower(5, 1, 2), E2 = tower(5, 1, 2);
  CHECK_RAISES(E1->element(2) * E2->element(3), Errc::field_mismatch);
}

TEST_SUITE_END();
