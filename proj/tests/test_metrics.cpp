#include <cmath>
#include <map>

#include "doctest.h"
#include "netform/dynamics.hpp"
#include "netform/metrics.hpp"

using namespace netform;

namespace {
SocietyConfig one_type(double cost, double gamma) {
  SocietyConfig cfg;
  TypeProfile p;
  p.alpha_same = 1.0;
  p.alpha_diff = 1.0;
  p.link_cost = cost;
  p.curve = {CurveFamily::sqrt_like, 2.0};
  p.opportunism = gamma;
  cfg.profiles = {p};
  cfg.horizon = 64;
  return cfg;
}

EmpiricalPmf point_mass(double at) {
  EmpiricalPmf p;
  p.support = {at};
  p.mass = {1.0};
  p.n = 1;
  return p;
}
}  // namespace

TEST_CASE("empirical pmfs normalize, sort and average correctly") {
  const EmpiricalPmf p = pmf_from_samples({3.0, 5.0, 3.0, 7.0});
  CHECK(p.support == std::vector<double>{3.0, 5.0, 7.0});
  CHECK(p.mass[0] == doctest::Approx(0.5));
  CHECK(p.n == 4);
  CHECK(p.total_mass() == doctest::Approx(1.0));
  CHECK(p.mean() == doctest::Approx(4.5));

  const EmpiricalPmf q = pmf_from_counts({{2, 1}, {4, 3}});
  CHECK(q.support == std::vector<double>{2.0, 4.0});
  CHECK(q.mass[1] == doctest::Approx(0.75));
  CHECK(q.n == 4);
}

TEST_CASE("first-order dominance verdicts") {
  CHECK(fosd_test(point_mass(5.0), point_mass(3.0), 1e-9) == FosdVerdict::a_dominates);
  CHECK(fosd_test(point_mass(3.0), point_mass(5.0), 1e-9) == FosdVerdict::b_dominates);
  CHECK(fosd_test(point_mass(3.0), point_mass(3.0), 1e-9) == FosdVerdict::neither);

  // crossing CDFs: a has both the smallest and the largest value
  EmpiricalPmf spread;
  spread.support = {1.0, 10.0};
  spread.mass = {0.5, 0.5};
  spread.n = 2;
  CHECK(fosd_test(spread, point_mass(5.0), 1e-9) == FosdVerdict::neither);

  // tolerance forgives small CDF violations
  EmpiricalPmf nearly = point_mass(5.0);
  nearly.support = {3.0, 5.0};
  nearly.mass = {0.01, 0.99};
  nearly.n = 100;
  CHECK(fosd_test(nearly, point_mass(3.0), 0.05) == FosdVerdict::a_dominates);
  CHECK(std::string(to_string(FosdVerdict::neither)) == "neither");
}

TEST_CASE("bonding capital averages utility per capita and reports segregation") {
  SocietyConfig cfg;
  TypeProfile a;
  a.alpha_same = 2.0;
  a.alpha_diff = 0.0;
  a.link_cost = 0.9;
  a.curve = {CurveFamily::sqrt_like, 2.0};
  a.pop_share = 0.5;
  cfg.profiles = {a, a};
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 4; ++k) g.add_agent(k % 2);
  g.add_edge(1, 3);  // type 0 links own type twice: utility 2*sqrt(4)-1.8
  g.add_agent(0);
  g.add_edge(1, 5);
  const CapitalReport rep = bonding_capital(g);
  const double u1 = 2.0 * std::sqrt(4.0) - 1.8;
  CHECK(rep.per_type_count[0] == 3);
  CHECK(rep.per_type_count[1] == 2);
  CHECK(rep.per_type_bonding[0] == doctest::Approx(u1 / 3.0));
  CHECK(rep.per_type_bonding[1] == 0.0);
  CHECK(rep.total_bonding == doctest::Approx(u1 / 5.0));
  CHECK(rep.omega == 1);
  // historical view: before the second edge, agent 1 holds one link
  const CapitalReport early = bonding_capital(g, 4);
  CHECK(early.per_type_bonding[0] ==
        doctest::Approx((2.0 * std::sqrt(2.0) - 0.9) / 2.0));
}

TEST_CASE("popularity series counts in-edges date by date") {
  SocietyConfig cfg = one_type(0.6, 0.0);
  cfg.horizon = 6;
  Trajectory traj{cfg, EvolvingGraph(cfg), {}, 0};
  EvolvingGraph& g = traj.graph;
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(2, 1);  // t = 2
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(4, 1);  // t = 4
  g.add_agent(0);
  g.add_agent(0);
  const auto series = popularity_series(traj, 1);
  CHECK(series == std::vector<std::uint32_t>{0, 1, 1, 2, 2, 2});
  const auto late = popularity_series(traj, 4);
  CHECK(late[2] == 0);  // not born yet
}

TEST_CASE("popularity distribution is per type and dated") {
  SocietyConfig cfg = one_type(0.6, 0.0);
  EvolvingGraph g(cfg);
  for (int k = 0; k < 5; ++k) g.add_agent(0);
  g.add_edge(2, 1);
  g.add_edge(3, 1);
  g.add_edge(4, 5);
  const auto pmf = popularity_distribution(g, 0, g.t());
  REQUIRE(pmf.has_value());
  CHECK(pmf->n == 5);
  CHECK(pmf->support == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(pmf->mass[0] == doctest::Approx(0.6));  // agents 2,3,4 have no followers
  CHECK(pmf->mass[2] == doctest::Approx(0.2));
  CHECK_FALSE(popularity_distribution(g, 1, g.t()).has_value());
}

TEST_CASE("formation-time samples honor the cohort and satisfaction split") {
  SocietyConfig cfg = one_type(0.6, 0.5);
  cfg.horizon = 200;
  const Trajectory traj = simulate(cfg);
  const EftSample all = eft_samples(traj, 0, 2, 150);
  CHECK(all.values.size() + all.unsatisfied == 149);
  for (std::uint32_t v : all.values) CHECK(v == 3);  // identical weights
  const EftSample none = eft_samples(traj, 1, 2, 150);
  CHECK(none.values.empty());
  const auto pmf = eft_empirical_pmf(traj, 0, 2, 150);
  REQUIRE(pmf.has_value());
  CHECK(pmf->support == std::vector<double>{3.0});
}

TEST_CASE("betweenness matches the closed forms on a path") {
  SocietyConfig cfg = one_type(0.6, 0.0);
  cfg.horizon = 12;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 7; ++k) g.add_agent(0);
  for (AgentId v = 1; v < 7; ++v) g.add_edge(v, v + 1);
  const auto b = betweenness(g);
  for (std::uint32_t j = 1; j <= 7; ++j)
    CHECK(b[j - 1] == doctest::Approx((j - 1.0) * (7.0 - j)));
  const auto ref = betweenness_reference(g, g.t());
  for (std::uint32_t j = 0; j < 7; ++j) CHECK(b[j] == doctest::Approx(ref[j]));
}

TEST_CASE("betweenness treats edges as undirected and merges duplicates") {
  SocietyConfig cfg = one_type(0.6, 0.0);
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 3; ++k) g.add_agent(0);
  g.add_edge(1, 2);
  g.add_edge(2, 1);  // reciprocal edge must not double-count paths
  g.add_edge(2, 3);
  const auto b = betweenness(g);
  CHECK(b[0] == 0.0);
  CHECK(b[1] == 1.0);
  CHECK(b[2] == 0.0);
}

TEST_CASE("per-type betweenness averages the handed-in scores") {
  SocietyConfig cfg;
  TypeProfile p;
  p.curve = {CurveFamily::sqrt_like, 2.0};
  p.pop_share = 0.5;
  cfg.profiles = {p, p};
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  g.add_agent(0);
  g.add_agent(1);
  g.add_agent(0);
  const std::vector<double> scores = {3.0, 5.0, 1.0};
  const auto avg = avg_betweenness_by_type(g, g.t(), scores);
  CHECK(avg[0] == doctest::Approx(2.0));
  CHECK(avg[1] == doctest::Approx(5.0));
}

TEST_CASE("bootstrap CI collapses on constant data and brackets the mean") {
  const BootstrapCi flat = bootstrap_mean_ci({2.0, 2.0, 2.0, 2.0}, 0.95, 11);
  CHECK(flat.mean == doctest::Approx(2.0));
  CHECK(flat.lo == doctest::Approx(2.0));
  CHECK(flat.hi == doctest::Approx(2.0));
  std::vector<double> xs;
  for (int k = 0; k < 40; ++k) xs.push_back(k % 2 ? 1.0 : 3.0);
  const BootstrapCi ci = bootstrap_mean_ci(xs, 0.95, 11);
  CHECK(ci.lo < 2.0);
  CHECK(ci.hi > 2.0);
  CHECK(ci.lo > 1.0);
  CHECK(ci.hi < 3.0);
  // deterministic in the seed
  const BootstrapCi again = bootstrap_mean_ci(xs, 0.95, 11);
  CHECK(ci.lo == again.lo);
  CHECK(ci.hi == again.hi);
}

TEST_CASE("preferential-attachment probe runs on kept trajectories") {
  SocietyConfig cfg = one_type(0.5, 1.0);
  cfg.horizon = 400;
  cfg.replications = 1;
  std::vector<Trajectory> trajs;
  trajs.push_back(simulate(cfg, 0));
  trajs.push_back(simulate(cfg, 1));
  const PaReport report =
      preferential_attachment_check(trajs, {{100, 200}, {200, 400}}, 40, 0.05);
  CHECK(report.checkpoints.size() == 2);
  CHECK(report.total_pairs >= 1);
  for (const PaCheckpointReport& cp : report.checkpoints) {
    CHECK(cp.bins.size() >= 1);
    for (std::size_t k = 0; k + 1 < cp.bins.size(); ++k)
      CHECK(cp.bins[k].deg_hi < cp.bins[k + 1].deg_lo);
  }
}
