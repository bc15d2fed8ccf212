#include <benchmark/benchmark.h>

#include "netform/dynamics.hpp"
#include "netform/metrics.hpp"
#include "netform/oracles.hpp"

namespace {

netform::SocietyConfig society(double cost, double gamma, std::uint32_t horizon) {
  netform::TypeProfile p;
  p.alpha_same = 1.0;
  p.alpha_diff = 0.0;
  p.link_cost = cost;
  p.curve = {netform::CurveFamily::sqrt_like, 2.0};
  p.opportunism = gamma;
  p.pop_share = 0.5;
  netform::TypeProfile q = p;
  q.name = "b";
  p.name = "a";
  netform::SocietyConfig cfg;
  cfg.profiles = {p, q};
  cfg.horizon = horizon;
  return cfg;
}

void BM_simulate(benchmark::State& state) {
  const auto cfg = society(0.45, 0.5, static_cast<std::uint32_t>(state.range(0)));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    const auto traj = netform::simulate(cfg, stream++);
    benchmark::DoNotOptimize(traj.graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_simulate)->Arg(500)->Arg(2000)->Arg(5000);

void BM_betweenness(benchmark::State& state) {
  const auto cfg = society(0.45, 0.5, static_cast<std::uint32_t>(state.range(0)));
  const auto traj = netform::simulate(cfg, 0);
  for (auto _ : state) {
    const auto scores = netform::betweenness(traj.graph);
    benchmark::DoNotOptimize(scores.data());
  }
}
BENCHMARK(BM_betweenness)->Arg(500)->Arg(1000)->Arg(2000);

void BM_components(benchmark::State& state) {
  const auto cfg = society(0.45, 0.5, static_cast<std::uint32_t>(state.range(0)));
  const auto traj = netform::simulate(cfg, 0);
  for (auto _ : state) {
    const auto c = traj.graph.components_undirected();
    benchmark::DoNotOptimize(c.non_singleton_count);
  }
}
BENCHMARK(BM_components)->Arg(2000)->Arg(10000);

void BM_formation_time_pmf(benchmark::State& state) {
  const auto cfg = society(0.45, 0.5, 100);
  for (auto _ : state) {
    const auto pmf = netform::eft_pmf_closed_form(
        cfg.profiles[0], static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(pmf.tail_mass);
  }
}
BENCHMARK(BM_formation_time_pmf)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
