#include <benchmark/benchmark.h>

#include "boolreg/analysis.hpp"
#include "boolreg/completeness.hpp"
#include "boolreg/semantics.hpp"

using namespace boolreg;

namespace {

const char* const kSets[] = {"cc", "ff,tt,ii", "if,it", "ff,tt,ii,cc,if,it,ti,tc"};

void BM_StrictBound(benchmark::State& state) {
  const MethodSet m = MethodSet::from_codes(kSets[state.range(0)]);
  SearchOptions options;
  options.kmax = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(strict_bound(m, options));
  state.SetLabel(kSets[state.range(0)]);
}
BENCHMARK(BM_StrictBound)->ArgsProduct({{0, 1, 2, 3}, {4, 6, 8}})->Unit(benchmark::kMillisecond);

void BM_NaiveSearch(benchmark::State& state) {
  const MethodSet m = MethodSet::from_codes(kSets[state.range(0)]);
  SearchOptions options;
  options.kmax = 3;
  options.strategy = SearchStrategy::Naive;
  for (auto _ : state) benchmark::DoNotOptimize(search_witnesses(m, options));
  state.SetLabel(kSets[state.range(0)]);
}
BENCHMARK(BM_NaiveSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SearchOptions options;
  options.kmax = 6;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_subsets(canonical_base(), options, 1));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

const InstructionSeq& sample_sequence() {
  static const InstructionSeq s = parse_sequence(
      "+f.ii ; #3 ; -g.cc ; f.tc ; +g.if ; -f.it ; #2 ; g.cc ; +f.cc ; -g.ii ; f.ff ; !");
  return s;
}

ServiceFamily sample_family() {
  return ServiceFamily::singleton(Focus("f"), ServiceState::reg(true, MethodSet::all()))
      .with(Focus("g"), ServiceState::reg(false, MethodSet::all()));
}

void BM_RunPositional(benchmark::State& state) {
  const ServiceFamily u = sample_family();
  for (auto _ : state) benchmark::DoNotOptimize(run_positional(sample_sequence(), u));
}
BENCHMARK(BM_RunPositional);

void BM_RunAxiomatic(benchmark::State& state) {
  const ServiceFamily u = sample_family();
  for (auto _ : state) benchmark::DoNotOptimize(run_axiomatic(sample_sequence(), u));
}
BENCHMARK(BM_RunAxiomatic);

void BM_Summarize(benchmark::State& state) {
  const InstructionSeq s = parse_sequence("+f.if ; +f.if ; -f.it ; #2");
  for (auto _ : state) benchmark::DoNotOptimize(summarize(s, Focus("f")));
}
BENCHMARK(BM_Summarize);

}  // namespace

BENCHMARK_MAIN();
