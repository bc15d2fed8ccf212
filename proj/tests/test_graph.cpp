#include <stdexcept>

#include "doctest.h"
#include "netform/graph.hpp"

using namespace netform;

namespace {
SocietyConfig two_type_config() {
  SocietyConfig cfg;
  TypeProfile a;
  a.alpha_same = 1.0;
  a.alpha_diff = 1.0;
  a.link_cost = 0.6;  // saturates at 3 with the 2*sqrt curve
  a.curve = {CurveFamily::sqrt_like, 2.0};
  a.pop_share = 0.5;
  TypeProfile b = a;
  b.link_cost = 5.0;  // never links
  cfg.profiles = {a, b};
  cfg.horizon = 16;
  return cfg;
}
}  // namespace

TEST_CASE("agents are indexed by birth date and typed") {
  EvolvingGraph g(two_type_config());
  CHECK(g.t() == 0);
  CHECK(g.add_agent(0) == 1);
  CHECK(g.add_agent(1) == 2);
  CHECK(g.add_agent(0) == 3);
  CHECK(g.t() == 3);
  CHECK(g.agent(2).type_id == 1);
  CHECK(g.agent(3).followees.empty());
}

TEST_CASE("a type with zero link demand is born satisfied") {
  EvolvingGraph g(two_type_config());
  g.add_agent(1);
  CHECK(g.agent(1).satisfied);
  REQUIRE(g.agent(1).eft.has_value());
  CHECK(*g.agent(1).eft == 0);
  g.add_agent(0);
  CHECK_FALSE(g.agent(2).satisfied);
}

TEST_CASE("edges maintain both adjacency sides and the type-split counts") {
  EvolvingGraph g(two_type_config());
  for (int k = 0; k < 4; ++k) g.add_agent(k % 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.agent(1).n_same == 1);   // agent 3 shares type 0
  CHECK(g.agent(1).n_diff == 1);   // agent 2 is type 1
  CHECK(g.has_followee(1, 2));
  CHECK_FALSE(g.has_followee(2, 1));
  REQUIRE(g.followers(2).size() == 1);
  CHECK(g.followers(2)[0].peer == 1);
  CHECK(g.followers(2)[0].t == 4);  // formed at the current date
  CHECK_THROWS_AS(g.add_edge(1, 2), std::logic_error);
  CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 9), std::out_of_range);
}

TEST_CASE("choice set excludes self and direct followees, respects the snapshot") {
  EvolvingGraph g(two_type_config());
  for (int k = 0; k < 6; ++k) g.add_agent(0);  // all edges stamped t=6
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(1, 5);
  g.add_edge(5, 1);  // would put the actor itself in range
  // the default view is the start-of-step snapshot: edges formed at the
  // current date do not count yet
  CHECK(g.followees_of_followees(1).empty());
  CHECK(g.followees_of_followees(1, 6).empty());
  CHECK(g.followees_of_followees(1, 7) == std::vector<AgentId>{3, 4});  // 2,5 direct; 1 is self
}

TEST_CASE("historical degree views honor formation times") {
  EvolvingGraph g(two_type_config());
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(2, 1);  // t = 2
  g.add_agent(0);
  g.add_edge(3, 1);  // t = 3
  g.add_agent(1);
  g.add_edge(4, 1);  // t = 4
  CHECK(g.deg_in_at(1, 1) == 0);
  CHECK(g.deg_in_at(1, 2) == 1);
  CHECK(g.deg_in_at(1, 3) == 2);
  CHECK(g.deg_in_at(1, 4) == 3);
  CHECK(g.deg_out_at(2, 1) == 0);
  CHECK(g.deg_out_at(2, 2) == 1);
  const auto [same2, diff2] = g.counts_at(2, 2);
  CHECK(same2 == 1);
  CHECK(diff2 == 0);
  const auto [same4, diff4] = g.counts_at(4, 4);
  CHECK(same4 == 0);
  CHECK(diff4 == 1);
}

TEST_CASE("component census counts non-singletons only") {
  EvolvingGraph g(two_type_config());
  for (int k = 0; k < 7; ++k) g.add_agent(0);
  g.add_edge(1, 2);
  g.add_edge(3, 2);
  g.add_edge(4, 5);
  // 6 and 7 stay singletons
  const ComponentsResult c = g.components_undirected();
  CHECK(c.non_singleton_count == 2);
  CHECK(c.labels[0] == c.labels[1]);
  CHECK(c.labels[1] == c.labels[2]);
  CHECK(c.labels[3] == c.labels[4]);
  CHECK(c.labels[0] != c.labels[3]);
  CHECK(c.component_size[c.labels[0]] == 3);
  CHECK(c.component_size[c.labels[5]] == 1);
}

TEST_CASE("component census can be taken at any past date") {
  EvolvingGraph g(two_type_config());
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(1, 2);  // t = 2
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(3, 4);  // t = 4
  CHECK(g.components_undirected(1).non_singleton_count == 0);
  CHECK(g.components_undirected(2).non_singleton_count == 1);
  CHECK(g.components_undirected(3).non_singleton_count == 1);
  CHECK(g.components_undirected(4).non_singleton_count == 2);
}

TEST_CASE("ego networks follow out-edges to the requested depth") {
  EvolvingGraph g(two_type_config());
  for (int k = 0; k < 5; ++k) g.add_agent(0);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(5, 1);
  const Subgraph depth1 = g.ego_network(1, 1);
  CHECK(depth1.nodes == std::vector<AgentId>{1, 2});
  CHECK(depth1.edges == std::vector<std::pair<AgentId, AgentId>>{{1, 2}});
  const Subgraph depth2 = g.ego_network(1, 2);
  CHECK(depth2.nodes == std::vector<AgentId>{1, 2, 3});
  CHECK(depth2.edges.size() == 2);
}

TEST_CASE("graphs stay valid after being moved") {
  EvolvingGraph g(two_type_config());
  g.add_agent(0);
  g.add_agent(0);
  g.add_edge(2, 1);
  EvolvingGraph moved = std::move(g);
  CHECK(moved.config().profiles.size() == 2);
  CHECK(moved.agent(2).n_same == 1);
  CHECK(moved.type_gregariousness()[0] == 3);
}
