#include "netform/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace netform {

EvolvingGraph::EvolvingGraph(const SocietyConfig& config) : config_(config) {
  lstar0_.reserve(config.profiles.size());
  for (const auto& profile : config.profiles)
    lstar0_.push_back(compute_L_star(profile, 0.0));
  agents_.reserve(config.horizon);
  followers_.reserve(config.horizon);
}

AgentId EvolvingGraph::add_agent(std::uint32_t type_id) {
  if (type_id >= lstar0_.size())
    throw std::out_of_range("add_agent: unknown type id");
  AgentState a;
  a.type_id = type_id;
  if (lstar0_[type_id] == 0) {
    a.satisfied = true;  // nothing is ever worth linking for this type
    a.eft = 0;
  }
  agents_.push_back(std::move(a));
  followers_.emplace_back();
  return static_cast<AgentId>(agents_.size());
}

bool EvolvingGraph::has_followee(AgentId from, AgentId to) const {
  const auto& fe = agents_[from - 1].followees;
  return std::any_of(fe.begin(), fe.end(),
                     [to](const Link& l) { return l.peer == to; });
}

void EvolvingGraph::add_edge(AgentId from, AgentId to) {
  if (from == to) throw std::invalid_argument("add_edge: self-edge rejected");
  if (from == 0 || to == 0 || from > t() || to > t())
    throw std::out_of_range("add_edge: agent id out of range");
  if (has_followee(from, to))
    throw std::logic_error("add_edge: duplicate edge rejected");
  const std::uint32_t now = t();
  AgentState& src = agents_[from - 1];
  src.followees.push_back({to, now});
  if (src.type_id == agents_[to - 1].type_id)
    ++src.n_same;
  else
    ++src.n_diff;
  followers_[to - 1].push_back({from, now});
  ++edge_count_;
}

std::vector<AgentId> EvolvingGraph::followees_of_followees(
    AgentId from, std::uint32_t before_t) const {
  const AgentState& src = agents_[from - 1];
  std::vector<AgentId> direct;
  direct.reserve(src.followees.size());
  for (const Link& l : src.followees)
    if (l.t < before_t) direct.push_back(l.peer);

  std::vector<AgentId> result;
  for (AgentId mid : direct) {
    for (const Link& l : agents_[mid - 1].followees) {
      if (l.t >= before_t) continue;
      if (l.peer == from) continue;
      result.push_back(l.peer);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  // Drop direct followees (any formation date before the snapshot).
  std::sort(direct.begin(), direct.end());
  std::vector<AgentId> filtered;
  filtered.reserve(result.size());
  std::set_difference(result.begin(), result.end(), direct.begin(), direct.end(),
                      std::back_inserter(filtered));
  return filtered;
}

ComponentsResult EvolvingGraph::components_undirected(std::uint32_t at_t) const {
  const std::uint32_t n = std::min<std::uint32_t>(t(), at_t);
  ComponentsResult res;
  res.labels.assign(t(), 0);

  // Union-find over agents born by at_t.
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const Link& l : agents_[v].followees) {
      if (l.t > at_t || l.peer > n) continue;
      const std::uint32_t a = find(v), b = find(l.peer - 1);
      if (a != b) parent[a] = b;
    }
  }

  std::vector<std::uint32_t> root_label(n, 0);
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t r = find(v);
    if (root_label[r] == 0) {
      sizes.push_back(0);
      root_label[r] = static_cast<std::uint32_t>(sizes.size());  // 1-based
    }
    res.labels[v] = root_label[r] - 1;
    ++sizes[root_label[r] - 1];
  }
  res.component_size = std::move(sizes);
  for (std::uint32_t s : res.component_size)
    if (s > 1) ++res.non_singleton_count;
  return res;
}

Subgraph EvolvingGraph::ego_network(AgentId root, std::uint32_t depth) const {
  if (depth < 1) throw std::invalid_argument("ego_network: depth must be >= 1");
  std::vector<bool> seen(t() + 1, false);
  std::vector<AgentId> nodes{root};
  seen[root] = true;
  std::queue<std::pair<AgentId, std::uint32_t>> frontier;
  frontier.push({root, 0});
  while (!frontier.empty()) {
    auto [v, d] = frontier.front();
    frontier.pop();
    if (d == depth) continue;
    for (const Link& l : agents_[v - 1].followees) {
      if (!seen[l.peer]) {
        seen[l.peer] = true;
        nodes.push_back(l.peer);
        frontier.push({l.peer, d + 1});
      }
    }
  }
  std::sort(nodes.begin(), nodes.end());
  Subgraph sg;
  sg.nodes = nodes;
  for (AgentId v : nodes) {
    for (const Link& l : agents_[v - 1].followees) {
      if (std::binary_search(nodes.begin(), nodes.end(), l.peer))
        sg.edges.emplace_back(v, l.peer);
    }
  }
  return sg;
}

std::uint32_t EvolvingGraph::deg_in_at(AgentId id, std::uint32_t at_t) const {
  const auto& fl = followers_[id - 1];
  // Followers append in formation order, so timestamps are nondecreasing.
  const auto it = std::upper_bound(
      fl.begin(), fl.end(), at_t,
      [](std::uint32_t value, const Link& l) { return value < l.t; });
  return static_cast<std::uint32_t>(it - fl.begin());
}

std::uint32_t EvolvingGraph::deg_out_at(AgentId id, std::uint32_t at_t) const {
  const auto& fe = agents_[id - 1].followees;
  const auto it = std::upper_bound(
      fe.begin(), fe.end(), at_t,
      [](std::uint32_t value, const Link& l) { return value < l.t; });
  return static_cast<std::uint32_t>(it - fe.begin());
}

std::pair<std::uint32_t, std::uint32_t> EvolvingGraph::counts_at(
    AgentId id, std::uint32_t at_t) const {
  const AgentState& a = agents_[id - 1];
  std::uint32_t same = 0, diff = 0;
  for (const Link& l : a.followees) {
    if (l.t > at_t) break;
    if (agents_[l.peer - 1].type_id == a.type_id)
      ++same;
    else
      ++diff;
  }
  return {same, diff};
}

}  // namespace netform
