#include <benchmark/benchmark.h>

#include "endhered/asymptotics.hpp"
#include "endhered/enumeration.hpp"
#include "endhered/pattern.hpp"
#include "endhered/structure.hpp"

namespace {

using namespace endhered;

void BM_MatchingStream(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_matching(n, [&](const Matching&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MatchingStream)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Bruteforce(benchmark::State& state) {
  const auto pats = EndheredPattern::all_of_size(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distributions_bruteforce(n, pats));
}
BENCHMARK(BM_Bruteforce)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CountOccurrences(benchmark::State& state) {
  const Matching m = random_matching(static_cast<std::size_t>(state.range(0)), 17);
  const auto pat = EndheredPattern::parse("21");
  for (auto _ : state) benchmark::DoNotOptimize(count_occurrences(m, pat));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountOccurrences)->Range(64, 1 << 14);

void BM_RandomMatching(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(random_matching(static_cast<std::size_t>(state.range(0)), rng));
}
BENCHMARK(BM_RandomMatching)->Range(64, 1 << 14);

void BM_TableA21(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table_a21(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TableA21)->Arg(9)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TableC321(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table_c321(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TableC321)->Arg(9)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TableD132(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table_d132(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TableD132)->Arg(9)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Avoid21(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(avoid21_probability(state.range(0)));
  }
}
BENCHMARK(BM_Avoid21)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ParseCollapse(benchmark::State& state) {
  const std::string text = "((((((.(((((.((.......((((.(.(.[..)]..).)))))).))))).))))))";
  for (auto _ : state) {
    const auto shape = collapse_shape(to_matching(parse_dotbracket(text)));
    benchmark::DoNotOptimize(serialize_dotbracket(shape));
  }
}
BENCHMARK(BM_ParseCollapse);

}  // namespace

BENCHMARK_MAIN();
