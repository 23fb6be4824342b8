#include <benchmark/benchmark.h>

#include "fgroups/catalog.hpp"
#include "fgroups/fusion.hpp"
#include "fgroups/group.hpp"
#include "fgroups/nilpotency.hpp"
#include "fgroups/verify.hpp"

namespace {

void BM_GenerateS6(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::build(fg::GroupSpec::symmetric(6)));
  }
}
BENCHMARK(BM_GenerateS6);

void BM_CentralizerInS6(benchmark::State& state) {
  fg::FiniteGroup s6 = fg::build(fg::GroupSpec::symmetric(6));
  fg::Subgroup sylow = fg::sylow_subgroup(s6, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::centralizer(s6, sylow));
  }
}
BENCHMARK(BM_CentralizerInS6);

void BM_SylowS6(benchmark::State& state) {
  fg::FiniteGroup s6 = fg::build(fg::GroupSpec::symmetric(6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::sylow_subgroup(s6, 2));
  }
}
BENCHMARK(BM_SylowS6);

void BM_SubgroupLatticeE16(benchmark::State& state) {
  fg::FiniteGroup e16 = fg::build(fg::GroupSpec::elementary_abelian(2, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::all_subgroups_of_p_group(e16, fg::full_subgroup(e16)));
  }
}
BENCHMARK(BM_SubgroupLatticeE16);

void BM_ControlsFusionQuaternionExtension(benchmark::State& state) {
  fg::FiniteGroup g = fg::quaternion_semidirect_c3();
  fg::Subgroup q8 = fg::sylow_subgroup(g, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::controls_fusion(g, q8, fg::FusionClass::cp(2)));
  }
}
BENCHMARK(BM_ControlsFusionQuaternionExtension);

void BM_IsPNilpotentA5(benchmark::State& state) {
  fg::FiniteGroup a5 = fg::build(fg::GroupSpec::alternating(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::is_p_nilpotent(a5, 2));
  }
}
BENCHMARK(BM_IsPNilpotentA5);

void BM_FrobeniusS4(benchmark::State& state) {
  fg::FiniteGroup s4 = fg::build(fg::GroupSpec::symmetric(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::frobenius_criterion(s4, 2));
  }
}
BENCHMARK(BM_FrobeniusS4);

void BM_SuiteOrder24(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::run_suite(24, {2, 3}));
  }
}
BENCHMARK(BM_SuiteOrder24);

}  // namespace

BENCHMARK_MAIN();
