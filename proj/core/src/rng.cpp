#include "fracrs/rng.hpp"

namespace fracrs {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256 Xoshiro256::seeded(std::uint64_t seed) {
  SplitMix64 sm{seed};
  Xoshiro256 g;
  for (auto& w : g.s_) w = sm.next();
  return g;
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  // Modulo-rejection: discard draws from the biased tail.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t mix_tag(std::uint64_t state, std::uint64_t tag) {
  SplitMix64 sm{state + 0x9e3779b97f4a7c15ULL * (tag + 1)};
  return sm.next();
}

Xoshiro256 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = seed;
  for (std::uint64_t tag : tags) s = mix_tag(s, tag);
  return Xoshiro256::seeded(s);
}

}  // namespace fracrs
