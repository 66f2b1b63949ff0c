#include <benchmark/benchmark.h>

#include "rmg/enumeration.hpp"
#include "rmg/extension.hpp"
#include "rmg/fixtures.hpp"
#include "rmg/identities.hpp"
#include "rmg/inflation.hpp"
#include "rmg/morphisms.hpp"

using namespace rmg;

namespace {

void BM_RightModularCheck(benchmark::State& state) {
  const Magma& w = fixture("W");
  for (auto _ : state) benchmark::DoNotOptimize(is_right_modular(w).holds);
}
BENCHMARK(BM_RightModularCheck);

void BM_MedialCheck(benchmark::State& state) {
  const Magma& w = fixture("W");
  for (auto _ : state) benchmark::DoNotOptimize(is_medial(w).holds);
}
BENCHMARK(BM_MedialCheck);

void BM_CanonicalFormW(benchmark::State& state) {
  const Magma& w = fixture("W");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(w).table()[0]);
}
BENCHMARK(BM_CanonicalFormW);

void BM_CanonicalFormOrder6(benchmark::State& state) {
  // order-6 null table: worst case is the full 6! sweep
  const Magma m(6);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m).table()[0]);
}
BENCHMARK(BM_CanonicalFormOrder6);

void BM_FindGenInflationEx2(benchmark::State& state) {
  const Magma& g = fixture("EX2_PRINTED");
  const ElementSet u(4, {0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(find_gen_inflation(g, u));
}
BENCHMARK(BM_FindGenInflationEx2);

void BM_EnumerateRmOrder3(benchmark::State& state) {
  EnumerationConstraints c;
  c.order = 3;
  c.require.right_modular = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_magmas(c));
}
BENCHMARK(BM_EnumerateRmOrder3);

void BM_ExtendW(benchmark::State& state) {
  const Magma& w = fixture("W");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_rm_extensions(w, false).size());
}
BENCHMARK(BM_ExtendW);

void BM_ExtensionConditions(benchmark::State& state) {
  const Magma& w = fixture("W");
  const ExtensionSpec spec{w, 0, {0, 1, 2, 3}, {3, 2, 1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(extension_conditions(spec).holds);
}
BENCHMARK(BM_ExtensionConditions);

}  // namespace

BENCHMARK_MAIN();
