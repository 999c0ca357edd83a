#include <benchmark/benchmark.h>

#include "prefixgroup/compression.hpp"
#include "prefixgroup/random.hpp"
#include "prefixgroup/witnesses.hpp"

using namespace prefixgroup;

namespace {

std::vector<PrefixMap> elements(std::size_t depth, std::size_t count) {
  Rng rng(1234);
  std::vector<PrefixMap> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_nonidentity(rng, 2, depth));
  return out;
}

std::vector<ClopenSet> regions(std::size_t depth, std::size_t count) {
  Rng rng(4321);
  std::vector<ClopenSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_proper_clopen(rng, 2, depth));
  return out;
}

void BM_Compose(benchmark::State &state) {
  const auto gs = elements(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(gs[i % 64], gs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Compose)->DenseRange(3, 7, 2);

void BM_Invert(benchmark::State &state) {
  const auto gs = elements(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invert(gs[i++ % 64]));
}
BENCHMARK(BM_Invert)->DenseRange(3, 7, 2);

void BM_ImageClopen(benchmark::State &state) {
  const auto gs = elements(5, 64);
  const auto cs = regions(5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(image_clopen(gs[i % 64], cs[(i * 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_ImageClopen);

void BM_Transporter(benchmark::State &state) {
  const auto cs = regions(5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transporter(cs[i % 64], cs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Transporter);

void BM_Decompose2(benchmark::State &state) {
  const auto gs = elements(5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose2(gs[i++ % 64]).s1);
}
BENCHMARK(BM_Decompose2);

void BM_DerivedConjugator(benchmark::State &state) {
  const auto gs = elements(5, 64);
  const auto cs = regions(5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(derived_conjugator(gs[i % 64], cs[(i * 3) % 64]).d);
    ++i;
  }
}
BENCHMARK(BM_DerivedConjugator);

void BM_MonolithWitness(benchmark::State &state) {
  Rng rng(99);
  struct Input {
    PrefixMap a, b, n;
    ClopenSet ya, yb;
  };
  std::vector<Input> inputs;
  for (int i = 0; i < 32; ++i) {
    const ClopenSet ya = random_proper_clopen(rng, 2, 4);
    const ClopenSet yb = i % 2 ? complement(ya) : random_proper_clopen(rng, 2, 4);
    if (i % 2 == 0 && set_union(ya, yb).is_full()) continue;
    inputs.push_back({random_rist_element(rng, ya, 4), random_rist_element(rng, yb, 4),
                      random_nonidentity(rng, 2, 4), ya, yb});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto &in = inputs[i++ % inputs.size()];
    benchmark::DoNotOptimize(monolith_witness(in.a, in.ya, in.b, in.yb, in.n).size());
  }
}
BENCHMARK(BM_MonolithWitness);

void BM_Claim3(benchmark::State &state) {
  const auto gs = elements(5, 64);
  const auto fam = min_cover_3(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(claim3_witness(gs[i % 64], gs[(i + 5) % 64], fam).c);
    ++i;
  }
}
BENCHMARK(BM_Claim3);

}  // namespace

BENCHMARK_MAIN();
