#include <benchmark/benchmark.h>

#include "affgr/polytope.hpp"
#include "affgr/psi.hpp"
#include "affgr/rops.hpp"

namespace affgr {
namespace {

Coweight scaled(const RootSystem& rs, Int k) {
  IntVec v(rs.rank(), 0);
  v[0] = -k;
  v[rs.rank() - 1] = k > 1 ? k - 1 : 0;
  return Coweight(v);
}

void BM_PsiInfinity(benchmark::State& state, const char* label) {
  RootSystem rs(label);
  const Coweight lam = scaled(rs, state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    auto p = psi_infinity(rs, lam);
    n = p.size();
    benchmark::DoNotOptimize(p);
  }
  state.counters["members"] = static_cast<double>(n);
}
BENCHMARK_CAPTURE(BM_PsiInfinity, A2, "A2")->DenseRange(2, 8, 3);
BENCHMARK_CAPTURE(BM_PsiInfinity, B3, "B3")->DenseRange(1, 3, 1);

void BM_PsiByOracle(benchmark::State& state, const char* label) {
  RootSystem rs(label);
  AffineWeylGroup g(rs);
  Components comps(g);
  const Coweight lam = scaled(rs, state.range(0));
  for (auto _ : state) {
    IwahoriOrder order(comps);
    benchmark::DoNotOptimize(order.psi_by_oracle(lam));
  }
}
BENCHMARK_CAPTURE(BM_PsiByOracle, A2, "A2")->DenseRange(2, 8, 3);
BENCHMARK_CAPTURE(BM_PsiByOracle, B3, "B3")->DenseRange(1, 3, 1);

void BM_Bruhat(benchmark::State& state) {
  RootSystem rs("B2");
  AffineWeylGroup g(rs);
  const Coweight th = rs.coroot(rs.highest_root_id());
  const auto v = g.translation(-(state.range(0) * th));
  const auto u = g.translation(state.range(0) / 2 * th);
  for (auto _ : state) {
    BruhatOracle oracle(g);
    benchmark::DoNotOptimize(oracle.leq(u, v));
  }
}
BENCHMARK(BM_Bruhat)->RangeMultiplier(2)->Range(2, 16);

void BM_Dimension(benchmark::State& state, const char* label) {
  RootSystem rs(label);
  AffineWeylGroup g(rs);
  const Coweight lam = scaled(rs, 5);
  for (auto _ : state) benchmark::DoNotOptimize(dim_orbit(g, lam));
}
BENCHMARK_CAPTURE(BM_Dimension, A2, "A2");
BENCHMARK_CAPTURE(BM_Dimension, E7, "E7");
BENCHMARK_CAPTURE(BM_Dimension, E8, "E8");

void BM_MomentPolytope(benchmark::State& state) {
  RootSystem rs("B3");
  const auto psi = psi_infinity(rs, scaled(rs, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moment_polytope(rs, psi));
  state.counters["points"] = static_cast<double>(psi.size());
}
BENCHMARK(BM_MomentPolytope)->DenseRange(1, 3, 1);

void BM_BraidScan(benchmark::State& state) {
  RootSystem rs("G2");
  for (auto _ : state) benchmark::DoNotOptimize(braid_scan(rs, state.range(0)));
}
BENCHMARK(BM_BraidScan)->Arg(4)->Arg(8);

}  // namespace
}  // namespace affgr

BENCHMARK_MAIN();
