#include <benchmark/benchmark.h>

#include <random>

#include "racg/racg.hpp"

namespace {

racg::Presentation pentagon() {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}};
  return racg::Presentation::from_names({"1", "2", "3", "4", "5"}, pairs);
}

void BM_BallBuild(benchmark::State& state) {
  const auto p = pentagon();
  racg::BallOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto b = racg::ball(p, static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BallBuild)->Args({8, 1})->Args({10, 1})->Args({12, 1})->Args({12, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  const auto p = pentagon();
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<racg::Word> words(256);
  for (auto& w : words)
    for (int i = 0; i < state.range(0); ++i)
      w.letters.push_back(static_cast<racg::Generator>(pick(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    auto nf = racg::reduce(p, words[i++ % words.size()]);
    benchmark::DoNotOptimize(nf.length());
  }
}
BENCHMARK(BM_Reduce)->Arg(16)->Arg(64)->Arg(256);

void BM_QuasiDenseCheck(benchmark::State& state) {
  const auto p = pentagon();
  const auto b = racg::ball(p, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto v = racg::quasi_dense_check(b, p.parse_subset("4"), 3);
    benchmark::DoNotOptimize(v.dense());
  }
}
BENCHMARK(BM_QuasiDenseCheck)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
