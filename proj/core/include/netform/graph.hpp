// Directed evolving graph: agent states, adjacency with formation times,
// choice sets, components, ego networks. Agents are indexed by birth date
// (1-based, dense); edges are never removed, so the final graph plus the
// per-edge timestamps encode the whole history.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netform/utility.hpp"

namespace netform {

using AgentId = std::uint32_t;  // birth date, 1..t

struct Link {
  AgentId peer = 0;        // followee (out-lists) or follower (in-lists)
  std::uint32_t t = 0;     // step the edge formed
};

struct AgentState {
  std::uint32_t type_id = 0;
  std::vector<Link> followees;          // out-edges in formation order
  std::uint32_t n_same = 0, n_diff = 0; // followee counts by type match
  bool satisfied = false;
  std::optional<std::uint32_t> eft;     // steps from birth to saturation
};

struct ComponentsResult {
  std::uint32_t non_singleton_count = 0;      // the omega statistic
  std::vector<std::uint32_t> labels;          // per agent, singletons included
  std::vector<std::uint32_t> component_size;  // indexed by label
};

struct Subgraph {
  std::vector<AgentId> nodes;                       // sorted
  std::vector<std::pair<AgentId, AgentId>> edges;   // directed, induced
};

class EvolvingGraph {
 public:
  explicit EvolvingGraph(const SocietyConfig& config);

  // Births one agent of the given type at date t()+1; immediately satisfied
  // with eft=0 when the type's gregariousness is zero.
  AgentId add_agent(std::uint32_t type_id);

  // Inserts the directed edge (from -> to) formed at the current date and
  // maintains both adjacency indices and from's type-split counts.
  // Self-edges and duplicates are engine bugs and throw.
  void add_edge(AgentId from, AgentId to);

  std::uint32_t t() const { return static_cast<std::uint32_t>(agents_.size()); }
  const AgentState& agent(AgentId id) const { return agents_[id - 1]; }
  AgentState& agent_mutable(AgentId id) { return agents_[id - 1]; }
  const std::vector<Link>& followers(AgentId id) const { return followers_[id - 1]; }
  const SocietyConfig& config() const { return config_; }
  std::uint64_t edge_count() const { return edge_count_; }

  bool has_followee(AgentId from, AgentId to) const;

  // Choice set: followees of from's followees, excluding `from` and its own
  // followees, restricted to edges formed strictly before `before_t`
  // (pass t() for start-of-step semantics). Sorted, duplicate-free.
  std::vector<AgentId> followees_of_followees(AgentId from,
                                              std::uint32_t before_t) const;
  std::vector<AgentId> followees_of_followees(AgentId from) const {
    return followees_of_followees(from, t());
  }

  // Undirected components over edges formed at or before at_t; the count
  // covers non-singleton components only, labels cover everyone.
  ComponentsResult components_undirected(std::uint32_t at_t) const;
  ComponentsResult components_undirected() const { return components_undirected(t()); }

  // Induced subgraph on `root` plus nodes reachable by directed paths of
  // length <= depth.
  Subgraph ego_network(AgentId root, std::uint32_t depth) const;

  // History views (edges formed at or before at_t).
  std::uint32_t deg_in_at(AgentId id, std::uint32_t at_t) const;
  std::uint32_t deg_out_at(AgentId id, std::uint32_t at_t) const;
  std::pair<std::uint32_t, std::uint32_t> counts_at(AgentId id, std::uint32_t at_t) const;

  const std::vector<std::uint32_t>& type_gregariousness() const { return lstar0_; }

 private:
  SocietyConfig config_;  // owned copy: graphs stay valid across moves
  std::vector<AgentState> agents_;
  std::vector<std::vector<Link>> followers_;
  std::vector<std::uint32_t> lstar0_;  // per-type L*(0), for birth satisfaction
  std::uint64_t edge_count_ = 0;
};

}  // namespace netform
