#include <benchmark/benchmark.h>

#include "vnum/asymptotics.hpp"
#include "vnum/vnumber.hpp"

namespace {

using namespace vnum;

ModulePattern fourPrime() {
  const auto r = RingSpec::standard({"x", "y", "z"});
  const auto I = MonomialIdeal::minimalize(r, {Monomial{2, 0, 0}, Monomial{0, 1, 2}});
  const auto J = MonomialIdeal::minimalize(r, {Monomial{0, 2, 0}, Monomial{1, 0, 2}});
  return ModulePattern::simple(PatternKind::QuotientByPower, {I, J});
}

void BM_MultiPower(benchmark::State& state) {
  const auto p = fourPrime();
  const std::vector<std::int64_t> n{state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(multiPower(p.ideals, n));
}
BENCHMARK(BM_MultiPower)->Arg(2)->Arg(4)->Arg(8);

void BM_GlobalVNumber(benchmark::State& state) {
  const auto p = fourPrime();
  const std::vector<std::int64_t> n{state.range(0), state.range(0)};
  const auto s = instantiate(p, n);
  for (auto _ : state) benchmark::DoNotOptimize(globalVNumber(s));
}
BENCHMARK(BM_GlobalVNumber)->Arg(2)->Arg(4)->Arg(6);

void BM_Survey(benchmark::State& state) {
  const auto p = fourPrime();
  SurveyOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(1));
  const auto box = GridBox::cube(2, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surveyFunction(p, Invariant::v(), box, opt));
}
BENCHMARK(BM_Survey)->Args({4, 1})->Args({4, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
