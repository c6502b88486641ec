#include <benchmark/benchmark.h>

#include "hypernorm/convex.hpp"
#include "hypernorm/laws.hpp"
#include "hypernorm/monads.hpp"
#include "hypernorm/tricocycloid.hpp"

using namespace hypernorm;

namespace {
  Dist<std::string> uniform(std::size_t n, char first) {
    Dist<std::string>::Map m;
    for (std::size_t i = 0; i < n; ++i) {
      m.emplace(std::string(1, char(first + i)), Q01(1, n));
    }
    return Dist<std::string>(std::move(m));
  }

  void BM_VGiry(benchmark::State& state) {
    QUnit r(3, 7), s(5, 11);
    for (auto _ : state) {
      benchmark::DoNotOptimize(v_giry(r, s));
    }
  }
  BENCHMARK(BM_VGiry);

  void BM_DistMix(benchmark::State& state) {
    auto n = std::size_t(state.range(0));
    auto a = uniform(n, 'a');
    auto b = uniform(n, 'a' + n / 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(dist_mix(QUnit(1, 3), a, b));
    }
  }
  BENCHMARK(BM_DistMix)->Arg(2)->Arg(8)->Arg(24);

  void BM_ConvexStar(benchmark::State& state) {
    auto space = convex_star(free_convex_space<std::string>(),
                             free_convex_space<std::string>());
    auto x = DistStar<std::string>::mid(QUnit(1, 3), uniform(3, 'a'), uniform(2, 'x'));
    auto y = DistStar<std::string>::mid(QUnit(3, 5), uniform(2, 'b'), uniform(3, 'y'));
    for (auto _ : state) {
      benchmark::DoNotOptimize(space(QUnit(2, 7), x, y));
    }
  }
  BENCHMARK(BM_ConvexStar);

  void BM_HypernormDist(benchmark::State& state) {
    auto n = std::size_t(state.range(0));
    auto d = instance_dist();
    Dist<Value>::Map m;
    for (std::size_t i = 0; i < n; ++i) {
      m.emplace(Value::tagged(i % 3 + 1, Value::atom("a" + std::to_string(i))),
                Q01(1, n));
    }
    Value v = Value::dist(Dist<Value>(std::move(m)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(hypernorm_generic(d, v, 3));
    }
  }
  BENCHMARK(BM_HypernormDist)->Arg(3)->Arg(12)->Arg(48);

  void BM_RunLawNatural(benchmark::State& state) {
    Budget b;
    b.random_cases = 100;
    auto m = instance_dist();
    for (auto _ : state) {
      benchmark::DoNotOptimize(run_law(LawId::hyper_natural, m, b));
    }
  }
  BENCHMARK(BM_RunLawNatural)->Unit(benchmark::kMillisecond);
}  // namespace

BENCHMARK_MAIN();
