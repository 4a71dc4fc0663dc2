#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fracrs/rng.hpp"
#include "fracrs/stats.hpp"
#include "test_support.hpp"

using namespace fracrs;

namespace {

void check_pair(std::pair<double, double> got, double lo, double hi, double rel = 1e-9) {
  CHECK(got.first == doctest::Approx(lo).epsilon(rel));
  CHECK(got.second == doctest::Approx(hi).epsilon(rel));
}

}  // namespace

TEST_CASE("exact binomial interval: frozen reference values at 95%") {
  check_pair(clopper_pearson(0, 10000), 0.0, 0.0003688199146187622);
  check_pair(clopper_pearson(3, 10000), 6.187148574838717e-05, 0.0008764745225140007);
  check_pair(clopper_pearson(7, 10000), 0.0002814811457427946, 0.0014417323091497692);
  check_pair(clopper_pearson(50, 1000), 0.0373353976046618, 0.06539048791549364);
  check_pair(clopper_pearson(999, 1000), 0.9944410757201734, 0.9999746825125088);
  check_pair(clopper_pearson(1, 1), 0.025000000000000022, 1.0);
  check_pair(clopper_pearson(0, 1), 0.0, 0.975);
}

TEST_CASE("exact binomial interval: structural properties") {
  // Zero successes pin the lower limit; all successes pin the upper one.
  CHECK(clopper_pearson(0, 123).first == 0.0);
  CHECK(clopper_pearson(123, 123).second == 1.0);

  // A wider confidence level gives a containing interval.
  auto narrow = clopper_pearson(50, 1000, 0.95);
  auto wide = clopper_pearson(50, 1000, 0.99);
  CHECK(wide.first < narrow.first);
  CHECK(wide.second > narrow.second);

  // The point estimate always lies inside.
  for (std::uint64_t x : {std::uint64_t{1}, std::uint64_t{17}, std::uint64_t{400}}) {
    auto [lo, hi] = clopper_pearson(x, 500);
    const double p = double(x) / 500.0;
    CHECK(lo < p);
    CHECK(hi > p);
  }
}

TEST_CASE("exact binomial interval: validation") {
  CHECK_RAISES(clopper_pearson(0, 0), Errc::bad_config);
  CHECK_RAISES(clopper_pearson(5, 4), Errc::bad_config);
  CHECK_RAISES(clopper_pearson(1, 10, 0.0), Errc::bad_config);
  CHECK_RAISES(clopper_pearson(1, 10, 1.0), Errc::bad_config);
}

TEST_CASE("splitmix64 matches the reference sequence") {
  SplitMix64 sm{0};
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
  CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(sm.next() == 0x06c45d188009454fULL);

  SplitMix64 sm2{1234567};
  CHECK(sm2.next() == 0x599ed017fb08fc85ULL);
}

TEST_CASE("generator is deterministic for a fixed seed") {
  Xoshiro256 a = Xoshiro256::seeded(42);
  Xoshiro256 b = Xoshiro256::seeded(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Xoshiro256 c = Xoshiro256::seeded(43);
  Xoshiro256 d = Xoshiro256::seeded(42);
  bool all_equal = true;
  for (int i = 0; i < 100; ++i) all_equal &= (c.next() == d.next());
  CHECK_FALSE(all_equal);
}

TEST_CASE("stream derivation separates tags") {
  // No tags: identical to seeding directly.
  Xoshiro256 direct = Xoshiro256::seeded(7);
  Xoshiro256 derived = derive_stream(7, {});
  for (int i = 0; i < 8; ++i) CHECK(direct.next() == derived.next());

  // Different tag lists give different streams; order matters.
  auto first4 = [](Xoshiro256 g) {
    std::vector<std::uint64_t> v;
    for (int i = 0; i < 4; ++i) v.push_back(g.next());
    return v;
  };
  auto ab = first4(derive_stream(1, {2, 3}));
  auto ba = first4(derive_stream(1, {3, 2}));
  auto a = first4(derive_stream(1, {2}));
  CHECK(ab != ba);
  CHECK(ab != a);

  // Folding is pure and repeatable.
  CHECK(mix_tag(99, 5) == mix_tag(99, 5));
  CHECK(mix_tag(99, 5) != mix_tag(99, 6));
}

TEST_CASE("bounded draws stay in range and are unbiased enough") {
  Xoshiro256 g = Xoshiro256::seeded(2718);
  for (int i = 0; i < 50; ++i) CHECK(g.below(1) == 0);

  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::uint64_t v = g.below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (auto c : counts) {
    CHECK(c > 9000);   // expectation 10000 per bucket
    CHECK(c < 11000);
  }
}

TEST_CASE("algorithm identifier names the generator") {
  std::string id = kRngAlgorithm;
  CHECK(id.find("xoshiro") != std::string::npos);
  CHECK(id.find("splitmix64") != std::string::npos);
}
