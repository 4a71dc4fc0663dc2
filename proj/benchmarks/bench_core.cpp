// Microbenchmarks for the hot paths: field arithmetic, encoding, word
// projection, syndrome computation and the full fractional decode.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "fracrs/fracrs.hpp"

using namespace fracrs;

namespace {

ExtFieldPtr tower(std::uint64_t p, std::uint32_t s, std::uint32_t l) {
  return build_extension(build_field(p, s), l);
}

SchemePtr desk_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(2, 4, 3), 15, 2), 2,
                                std::vector<std::size_t>{1, 1}, std::nullopt);
}

SchemePtr wide_scheme() {
  return ProjectionScheme::make(CodeSpec::make(tower(2, 5, 5), 31, 4), 3,
                                std::vector<std::size_t>{2, 1, 1}, std::nullopt);
}

XPoly random_message(const ExtFieldCtx& E, std::size_t k, Xoshiro256& rng) {
  std::vector<Xelt> c;
  for (std::size_t i = 0; i < k; ++i) c.push_back(E.element(rng.below(E.order())));
  return XPoly(std::move(c));
}

std::vector<Xelt> corrupted_word(const SchemePtr& S, std::size_t t, Xoshiro256& rng) {
  const XPoly h = random_message(*S->code()->ext(), S->k(), rng);
  std::vector<Xelt> y = S->code()->encode(h);
  const std::vector<Xelt> e = plant_error(*S->code(), t, rng);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + e[i];
  return y;
}

void BM_base_field_mul(benchmark::State& state) {
  FieldPtr F = build_field(2, 4);
  Xoshiro256 rng = derive_stream(1, {});
  std::vector<Felt> xs, ys;
  for (int i = 0; i < 256; ++i) {
    xs.push_back(F->element(rng.below(F->order())));
    ys.push_back(F->element(rng.below(F->order())));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i & 255] * ys[(i + 7) & 255]);
    ++i;
  }
}
BENCHMARK(BM_base_field_mul);

void BM_extension_mul(benchmark::State& state) {
  ExtFieldPtr E = tower(2, 5, 5);
  Xoshiro256 rng = derive_stream(2, {});
  std::vector<Xelt> xs, ys;
  for (int i = 0; i < 256; ++i) {
    xs.push_back(E->element(rng.below(E->order())));
    ys.push_back(E->element(rng.below(E->order())));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i & 255] * ys[(i + 7) & 255]);
    ++i;
  }
}
BENCHMARK(BM_extension_mul);

void BM_encode(benchmark::State& state) {
  SchemePtr S = wide_scheme();
  Xoshiro256 rng = derive_stream(3, {});
  const XPoly h = random_message(*S->code()->ext(), S->k(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(S->code()->encode(h));
}
BENCHMARK(BM_encode);

void BM_project_word(benchmark::State& state) {
  SchemePtr S = wide_scheme();
  Xoshiro256 rng = derive_stream(4, {});
  const std::vector<Xelt> y = corrupted_word(S, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(S->project_word(y));
}
BENCHMARK(BM_project_word);

void BM_syndromes(benchmark::State& state) {
  SchemePtr S = wide_scheme();
  Xoshiro256 rng = derive_stream(5, {});
  const ProjectedWord Y = S->project_word(corrupted_word(S, 10, rng));
  for (auto _ : state) benchmark::DoNotOptimize(syndromes(S, Y));
}
BENCHMARK(BM_syndromes);

void BM_fractional_decode(benchmark::State& state) {
  SchemePtr S = state.range(0) == 0 ? desk_scheme() : wide_scheme();
  const std::size_t t = state.range(0) == 0 ? 7 : 13;
  Xoshiro256 rng = derive_stream(6, {});
  const ProjectedWord Y = S->project_word(corrupted_word(S, t, rng));
  for (auto _ : state) benchmark::DoNotOptimize(fractional_decode(S, Y));
}
BENCHMARK(BM_fractional_decode)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
