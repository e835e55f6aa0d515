#include <benchmark/benchmark.h>

#include "monoconj/campaign.hpp"
#include "monoconj/conjecture.hpp"
#include "monoconj/oracle.hpp"
#include "monoconj/resolution.hpp"
#include "monoconj/zeta.hpp"

using namespace monoconj;

namespace {

PlaneSemigroup sample(int g) { return random_semigroup(1234 + static_cast<std::uint64_t>(g), g, 1'000'000); }

void BM_BuildSemigroup(benchmark::State& state) {
  const auto gens = sample(static_cast<int>(state.range(0))).gens;
  for (auto _ : state) benchmark::DoNotOptimize(build_semigroup(gens));
}
BENCHMARK(BM_BuildSemigroup)->DenseRange(2, 5);

void BM_BuildResolution(benchmark::State& state) {
  const auto sg = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_resolution(sg));
}
BENCHMARK(BM_BuildResolution)->DenseRange(2, 5);

void BM_ZetaClosedForm(benchmark::State& state) {
  const auto sg = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_closed_form(sg));
}
BENCHMARK(BM_ZetaClosedForm)->DenseRange(2, 5);

void BM_VerifyConjecture(benchmark::State& state) {
  const auto sg = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(sg));
}
BENCHMARK(BM_VerifyConjecture)->DenseRange(2, 5);

// Dense expansion of Delta for generators of growing size (g = 2, so mu grows roughly linearly).
void BM_ExpandDelta(benchmark::State& state) {
  const auto m = state.range(0);
  const auto sg = build_semigroup({BigInt(4), BigInt(6), BigInt(static_cast<long>(2 * m + 1))});
  const auto delta = characteristic_polynomial(sg);
  for (auto _ : state) benchmark::DoNotOptimize(expand_dense(delta));
  state.counters["mu"] = static_cast<double>(milnor_number(sg).get_si());
}
BENCHMARK(BM_ExpandDelta)->RangeMultiplier(4)->Range(8, 8192);

void BM_ExpandAndVerifyDelta(benchmark::State& state) {
  const auto m = state.range(0);
  const auto delta = characteristic_polynomial(build_semigroup({BigInt(4), BigInt(6), BigInt(static_cast<long>(2 * m + 1))}));
  for (auto _ : state) benchmark::DoNotOptimize(expand_and_verify(delta));
}
BENCHMARK(BM_ExpandAndVerifyDelta)->RangeMultiplier(4)->Range(8, 512);

void BM_EnumerateOrbits(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  const auto t = CyclicQuotientType::cyclic(BigInt(static_cast<unsigned long>(d)), {BigInt(1), BigInt(1), BigInt(1)});
  const std::vector<std::uint64_t> k(3, d);
  const std::vector<RootConstant> c(3, RootConstant{});
  EnumerationBudget budget;
  budget.max_exponent = d;
  for (auto _ : state) benchmark::DoNotOptimize(enum_count_solutions(t, k, c, CountMode::Total, budget));
}
BENCHMARK(BM_EnumerateOrbits)->DenseRange(2, 10, 2);

void BM_FuzzCrossCheck(benchmark::State& state) {
  FuzzOptions opts;
  const auto sg = fuzz_instance(opts, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(sg, opts));
}
BENCHMARK(BM_FuzzCrossCheck)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
