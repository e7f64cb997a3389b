#include <benchmark/benchmark.h>

#include "sintpts/io.hpp"

using namespace sintpts;

namespace {

Problem quotient_problem() {
  DivisibilityProblem p;
  MultiPoly g = parse_poly("x+y+2", 2);
  for (const char* f : {"x", "y", "1-x-y"}) p.pairs.emplace_back(parse_poly(f, 2), g);
  return p;
}

Problem hexagon_problem() {
  NGonProblem p;
  for (long t = 0; t < 6; ++t) p.forms.push_back({1, t, t * t});
  p.S = PrimeSet{2, 3, 5};
  return p;
}

SearchDomain affine(long h) {
  SearchDomain d;
  d.height = h;
  return d;
}

SearchDomain projective(long h) {
  SearchDomain d;
  d.height = h;
  d.mode = SearchMode::projective;
  return d;
}

void BM_quotient_serial(benchmark::State& st) {
  Problem p = quotient_problem();
  for (auto _ : st) benchmark::DoNotOptimize(run_serial(p, affine(st.range(0))).records.size());
}

void BM_quotient_parallel(benchmark::State& st) {
  Problem p = quotient_problem();
  for (auto _ : st) benchmark::DoNotOptimize(run(p, affine(st.range(0))).records.size());
}

void BM_hexagon_serial(benchmark::State& st) {
  Problem p = hexagon_problem();
  for (auto _ : st) benchmark::DoNotOptimize(run_serial(p, projective(st.range(0))).records.size());
}

void BM_hexagon_parallel(benchmark::State& st) {
  Problem p = hexagon_problem();
  for (auto _ : st) benchmark::DoNotOptimize(run(p, projective(st.range(0))).records.size());
}

}  // namespace

BENCHMARK(BM_quotient_serial)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_quotient_parallel)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_hexagon_serial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_hexagon_parallel)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
