#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "shapegeo/arrangement.h"
#include "shapegeo/determinacy.h"
#include "shapegeo/shape.h"

namespace shapegeo {
namespace {

// n segments on lines in general position, plus n overlapping duplicates so
// that reduce has merging to do.
std::vector<Segment> Segments(int n, bool with_overlaps) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Segment> out;
  while (static_cast<int>(out.size()) < n) {
    Point2 p{Rational(d(rng)), Rational(d(rng))};
    Point2 q{Rational(d(rng)), Rational(d(rng))};
    if (p == q) continue;
    out.emplace_back(p, q);
    if (with_overlaps) {
      LineEq l = out.back().carrier();
      Rational t = line_parameter(l, out.back().p2());
      out.emplace_back(point_at_parameter(l, t - Rational(1)),
                       point_at_parameter(l, t + Rational(5)));
    }
  }
  return out;
}

void BM_Reduce(benchmark::State& state) {
  std::vector<Segment> segs = Segments(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(Shape::reduce(segs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ArrangementOf(benchmark::State& state) {
  Shape s = Shape::reduce(Segments(static_cast<int>(state.range(0)), false));
  for (auto _ : state) benchmark::DoNotOptimize(arrangement_of(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArrangementOf)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ClassifyRule(benchmark::State& state) {
  Shape s = Shape::reduce(Segments(static_cast<int>(state.range(0)), false));
  for (auto _ : state) benchmark::DoNotOptimize(classify_rule(s));
}
BENCHMARK(BM_ClassifyRule)->RangeMultiplier(2)->Range(4, 64);

void BM_OracleByTriples(benchmark::State& state) {
  Shape s = Shape::reduce(Segments(static_cast<int>(state.range(0)), false));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_determinate_by_triples(s));
}
BENCHMARK(BM_OracleByTriples)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace shapegeo

BENCHMARK_MAIN();
