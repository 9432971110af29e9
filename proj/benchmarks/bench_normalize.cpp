#include <benchmark/benchmark.h>

#include "meadow/decide.hpp"
#include "meadow/eval.hpp"
#include "meadow/normalize.hpp"
#include "meadow/syntax.hpp"

namespace {

using namespace meadow;

// ((x + y + 1)^n)^-1 + x * y^-1
Term nested(std::int64_t n) {
  return parse_term("((x + y + 1)^" + std::to_string(n) + ")^-1 + x * y^-1");
}

void BM_SplitInverse(benchmark::State& state) {
  Term t = nested(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(split_inverse(t));
}
BENCHMARK(BM_SplitInverse)->Arg(2)->Arg(8)->Arg(16)->Arg(32);

void BM_ClosedNormal(benchmark::State& state) {
  Term t = parse_term("(" + std::to_string(state.range(0)) + " + 3^-1)^4 * (7 + 2^-1)^-1");
  for (auto _ : state) benchmark::DoNotOptimize(closed_normal_iamd(t));
}
BENCHMARK(BM_ClosedNormal)->Arg(10)->Arg(100)->Arg(1000);

void BM_EvalTotal(benchmark::State& state) {
  Term t = nested(state.range(0));
  Assignment env = parse_assignment("x=3/7,y=5", Carrier::PositiveRationals);
  for (auto _ : state) benchmark::DoNotOptimize(eval_total(t, env, Carrier::PositiveRationals));
}
BENCHMARK(BM_EvalTotal)->Arg(8)->Arg(32);

void BM_DecideIamd(benchmark::State& state) {
  Term t = nested(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_iamd(Term::mul(t, Term::inv(t)), Term::one()));
}
BENCHMARK(BM_DecideIamd)->Arg(2)->Arg(6)->Arg(10);

void BM_DecideGil(benchmark::State& state) {
  std::string vars;
  for (std::int64_t i = 0; i < state.range(0); ++i) vars += " + v" + std::to_string(i) + "^2";
  Term t = parse_term("(1" + vars + ") * (1" + vars + ")^-1");
  for (auto _ : state) benchmark::DoNotOptimize(decide_iamdz_gil(t, Term::one()));
}
BENCHMARK(BM_DecideGil)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
