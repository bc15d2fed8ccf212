#include <tuple>
#include <vector>

#include "doctest.h"
#include "netform/dynamics.hpp"

using namespace netform;

namespace {
TypeProfile sqrt_profile(double a_same, double a_diff, double cost, double gamma,
                         double share) {
  TypeProfile p;
  p.alpha_same = a_same;
  p.alpha_diff = a_diff;
  p.link_cost = cost;
  p.curve = {CurveFamily::sqrt_like, 2.0};
  p.opportunism = gamma;
  p.pop_share = share;
  return p;
}

std::vector<std::tuple<AgentId, AgentId, std::uint32_t>> edge_list(const EvolvingGraph& g) {
  std::vector<std::tuple<AgentId, AgentId, std::uint32_t>> edges;
  for (AgentId i = 1; i <= g.t(); ++i)
    for (const Link& l : g.agent(i).followees) edges.emplace_back(i, l.peer, l.t);
  return edges;
}
}  // namespace

TEST_CASE("the first agent has nobody to meet") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.0, 1.0)};
  cfg.horizon = 2;
  EvolvingGraph g(cfg);
  g.add_agent(0);
  Rng rng(1, 0, 1);
  CHECK_FALSE(meeting_draw(g, 1, rng).has_value());
}

TEST_CASE("a saturated actor's meetings can only land outside its followees") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.0, 1.0)};
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 4; ++k) g.add_agent(0);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  Rng rng(7, 0, 1);
  for (int k = 0; k < 32; ++k) {
    const auto met = meeting_draw(g, 1, rng);
    REQUIRE(met.has_value());
    CHECK(met->first == 4);  // 2,3 followed, 1 is self
    CHECK(met->second == MeetVia::uniform);
  }
}

TEST_CASE("a fully opportunistic actor meets inside its choice set") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 1.0, 1.0)};
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 3; ++k) g.add_agent(0);
  g.add_edge(1, 2);  // t = 3: part of the next step's snapshot
  g.add_edge(2, 3);
  g.add_agent(0);  // advance to t = 4
  Rng rng(7, 0, 1);
  for (int k = 0; k < 32; ++k) {
    const auto met = meeting_draw(g, 1, rng);
    REQUIRE(met.has_value());
    CHECK(met->first == 3);
    CHECK(met->second == MeetVia::followee_of_followee);
  }
}

TEST_CASE("linking updates satisfaction and stamps the formation time") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.0, 1.0)};  // saturates at 3
  cfg.horizon = 8;
  EvolvingGraph g(cfg);
  for (int k = 0; k < 5; ++k) g.add_agent(0);
  CHECK(linking_step(g, 2, 3, cfg.profiles[0]));
  CHECK(linking_step(g, 2, 4, cfg.profiles[0]));
  CHECK_FALSE(g.agent(2).satisfied);
  CHECK(linking_step(g, 2, 5, cfg.profiles[0]));
  CHECK(g.agent(2).satisfied);
  REQUIRE(g.agent(2).eft.has_value());
  CHECK(*g.agent(2).eft == 5 - 2 + 1);  // saturated at date 5, born at 2
  // saturated agents refuse further links
  CHECK_FALSE(linking_step(g, 2, 1, cfg.profiles[0]));
}

TEST_CASE("simulate is deterministic per (seed, stream) and differs across streams") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.5, 0.5, 0.6),
                  sqrt_profile(1.0, 0.0, 0.6, 0.5, 0.4)};
  cfg.horizon = 200;
  cfg.seed = 42;
  const Trajectory a = simulate(cfg, 3);
  const Trajectory b = simulate(cfg, 3);
  const Trajectory c = simulate(cfg, 4);
  CHECK(edge_list(a.graph) == edge_list(b.graph));
  CHECK(edge_list(a.graph) != edge_list(c.graph));
  std::vector<std::uint32_t> types_a, types_b;
  for (AgentId i = 1; i <= a.graph.t(); ++i) {
    types_a.push_back(a.graph.agent(i).type_id);
    types_b.push_back(b.graph.agent(i).type_id);
  }
  CHECK(types_a == types_b);
}

TEST_CASE("identical weights make formation times deterministic") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.3, 1.0)};  // saturates at 3
  cfg.horizon = 60;
  cfg.seed = 5;
  const Trajectory traj = simulate(cfg);
  const EvolvingGraph& g = traj.graph;
  REQUIRE(g.t() == 60);
  REQUIRE(g.agent(1).eft.has_value());
  CHECK(*g.agent(1).eft == 4);  // no partner available at t = 1
  for (AgentId i = 2; i + 2 <= 60; ++i) {
    REQUIRE(g.agent(i).satisfied);
    CHECK(*g.agent(i).eft == 3);
  }
}

TEST_CASE("event recording captures one meeting per unsatisfied agent") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.5, 1.0)};
  cfg.horizon = 30;
  cfg.options.record_events = true;
  const Trajectory traj = simulate(cfg);
  CHECK_FALSE(traj.events.empty());
  for (const StepEvent& e : traj.events) {
    CHECK(e.t >= 2);  // nobody can meet at t = 1
    CHECK(e.t <= 30);
    CHECK(e.actor != e.met);
    CHECK(e.actor <= e.t);
    CHECK(e.met <= e.t);
  }
  // default runs record nothing
  SocietyConfig quiet = cfg;
  quiet.options.record_events = false;
  CHECK(simulate(quiet).events.empty());
}

TEST_CASE("types that can stall forever are the opportunistic interior ones") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(2.0, 1.3, 0.9, 1.0, 0.5),   // interior h, gamma 1
                  sqrt_profile(2.0, 0.0, 0.9, 1.0, 0.25),  // extreme h
                  sqrt_profile(2.0, 1.3, 0.9, 0.5, 0.25)}; // interior h, gamma < 1
  CHECK(detect_potentially_unsatisfied(cfg) == std::vector<std::uint32_t>{0});
}

TEST_CASE("meeting labels render") {
  CHECK(std::string(to_string(MeetVia::uniform)) == "uniform");
  CHECK(std::string(to_string(MeetVia::followee_of_followee)) == "fof");
}
