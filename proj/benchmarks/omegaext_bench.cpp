#include <benchmark/benchmark.h>

#include "omegaext/buchi.hpp"
#include "omegaext/classifier.hpp"
#include "omegaext/congruence.hpp"
#include "omegaext/game.hpp"
#include "omegaext/mso.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/random.hpp"
#include "omegaext/trio.hpp"

namespace {

using namespace omegaext;

const Alphabet kAB("ab");

std::vector<BuchiAutomaton> automata(std::size_t count, std::size_t max_states,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BuchiAutomaton> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_buchi(kAB, max_states, rng));
  return out;
}

void BM_Complement(benchmark::State& state) {
  const auto autos = automata(16, static_cast<std::size_t>(state.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complement(autos[i++ % autos.size()]));
  }
}
BENCHMARK(BM_Complement)->Arg(2)->Arg(3)->Arg(4);

void BM_AcceptsUp(benchmark::State& state) {
  const auto autos = automata(16, 6, 2);
  const auto words = all_up_words(kAB, 3, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(accepts_up(autos[i % autos.size()], words[i % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_AcceptsUp);

void BM_CheckCondition1(benchmark::State& state) {
  Rng rng(3);
  std::vector<Classifier> cs;
  for (int i = 0; i < 16; ++i) {
    cs.push_back(random_classifier(kAB, static_cast<std::size_t>(state.range(0)), 4, rng));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_condition1(cs[i++ % cs.size()]));
}
BENCHMARK(BM_CheckCondition1)->Arg(4)->Arg(6);

void BM_ArnoldClassesU(benchmark::State& state) {
  const auto oracle = oracle_U();
  for (auto _ : state) {
    benchmark::DoNotOptimize(arnold_classes_bounded(oracle, 4, 3));
  }
}
BENCHMARK(BM_ArnoldClassesU)->Unit(benchmark::kMillisecond);

void BM_PlayBounded(benchmark::State& state) {
  const OmegaWord w = BlockWord('a', 'b', AffineLengths{1, 0});
  const auto oracle = oracle_Uprime();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play_bounded(w, oracle, spoiler_random_strategy(++seed),
                                          duplicator_copy_strategy(), {10}));
  }
}
BENCHMARK(BM_PlayBounded);

void BM_CompileToBuchi(benchmark::State& state) {
  Rng rng(5);
  std::vector<Formula> fs;
  for (int i = 0; i < 16; ++i) fs.push_back(random_formula(kAB, {"X", "Y"}, 4, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile_to_buchi(fs[i++ % fs.size()], kAB));
  }
}
BENCHMARK(BM_CompileToBuchi)->Unit(benchmark::kMillisecond);

void BM_CensusL2(benchmark::State& state) {
  const auto L = oracle_anbn();
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_L2(L, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CensusL2)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
