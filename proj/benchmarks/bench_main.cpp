#include <benchmark/benchmark.h>

#include <memory>

#include "stdual/builtins.hpp"
#include "stdual/chartheory.hpp"
#include "stdual/verify.hpp"
#include "stdual/weyl.hpp"

namespace {

void BM_WeylGroup(benchmark::State& state) {
  const auto rs = stdual::build_root_system('B', static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stdual::weyl_group(rs).order());
}
BENCHMARK(BM_WeylGroup)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CharacterTableWeylB(benchmark::State& state) {
  const auto w = stdual::weyl_group(stdual::build_root_system('B', static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto g = std::make_shared<const stdual::FiniteGroup>(*w.group);
    benchmark::DoNotOptimize(stdual::character_table(g).size());
  }
}
BENCHMARK(BM_CharacterTableWeylB)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyBuiltin(benchmark::State& state, const char* name) {
  const auto s = stdual::builtin(name);
  for (auto _ : state) benchmark::DoNotOptimize(stdual::verify(s).all_pass());
}
BENCHMARK_CAPTURE(BM_VerifyBuiltin, z2, "z2-corank1");
BENCHMARK_CAPTURE(BM_VerifyBuiltin, klein4, "klein4");
BENCHMARK_CAPTURE(BM_VerifyBuiltin, q8, "q8-klein");
BENCHMARK_CAPTURE(BM_VerifyBuiltin, a2full, "a2-full");

void BM_Scan(benchmark::State& state) {
  const auto lib = stdual::builtin_library();
  for (auto _ : state) benchmark::DoNotOptimize(stdual::verify_all(lib).size());
}
BENCHMARK(BM_Scan)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
