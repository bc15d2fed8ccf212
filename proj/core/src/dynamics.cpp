#include "netform/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform {

namespace {

std::vector<double> cumulative_shares(const SocietyConfig& config) {
  std::vector<double> cum;
  cum.reserve(config.profiles.size());
  double acc = 0.0;
  for (const auto& p : config.profiles) {
    acc += p.pop_share;
    cum.push_back(acc);
  }
  return cum;
}

}  // namespace

AgentId birth_step(EvolvingGraph& g, const SocietyConfig& config, Rng& rng) {
  if (config.profiles.size() == 1) return g.add_agent(0);
  const auto cum = cumulative_shares(config);
  return g.add_agent(static_cast<std::uint32_t>(rng.categorical(cum)));
}

std::optional<std::pair<AgentId, MeetVia>> meeting_draw(const EvolvingGraph& g,
                                                        AgentId actor, Rng& rng) {
  const std::uint32_t now = g.t();
  if (now < 2) return std::nullopt;

  const TypeProfile& profile = g.config().profiles[g.agent(actor).type_id];
  const std::vector<AgentId> choice_set = g.followees_of_followees(actor, now);

  if (!choice_set.empty() && rng.bernoulli(profile.opportunism)) {
    const AgentId met =
        choice_set[rng.uniform_below(choice_set.size())];
    return std::make_pair(met, MeetVia::followee_of_followee);
  }

  // Uniform branch: anyone alive except the actor and its current followees.
  // Excluded ids, sorted, for an order-preserving skip walk.
  std::vector<AgentId> excluded;
  excluded.reserve(g.agent(actor).followees.size() + 1);
  excluded.push_back(actor);
  for (const Link& l : g.agent(actor).followees) excluded.push_back(l.peer);
  std::sort(excluded.begin(), excluded.end());

  const std::uint64_t pool = now - excluded.size();
  if (pool == 0) return std::nullopt;
  AgentId met = static_cast<AgentId>(rng.uniform_below(pool)) + 1;
  for (AgentId ex : excluded) {
    if (met >= ex) ++met;
  }
  return std::make_pair(met, MeetVia::uniform);
}

bool linking_step(EvolvingGraph& g, AgentId actor, AgentId met,
                  const TypeProfile& profile) {
  if (g.has_followee(actor, met)) return false;  // defensive; draws avoid this
  AgentState& a = g.agent_mutable(actor);
  const bool same = g.agent(met).type_id == a.type_id;
  if (!link_decision(profile, a.n_same, a.n_diff, same)) return false;
  g.add_edge(actor, met);
  // Saturated once not even a same-type candidate would gain: the same-type
  // marginal dominates the different-type one, so one check covers all types.
  if (!link_decision(profile, a.n_same, a.n_diff, true)) {
    a.satisfied = true;
    a.eft = g.t() - actor + 1;
  }
  return true;
}

Trajectory simulate(const SocietyConfig& config, std::uint64_t stream_id) {
  if (config.profiles.empty())
    throw std::invalid_argument("simulate: no type profiles");
  if (config.horizon < 1)
    throw std::invalid_argument("simulate: horizon must be >= 1");

  Trajectory traj{config, EvolvingGraph(config), {}, stream_id};
  EvolvingGraph& g = traj.graph;
  Rng birth_rng(config.seed, stream_id, 0);
  Rng meet_rng(config.seed, stream_id, 1);

  // Unsatisfied agents in birth order; stale (satisfied) entries are skipped
  // and compacted lazily so a step costs O(active).
  std::vector<AgentId> active;
  std::size_t stale = 0;

  for (std::uint32_t t = 1; t <= config.horizon; ++t) {
    const AgentId born = birth_step(g, config, birth_rng);
    if (!g.agent(born).satisfied) active.push_back(born);

    for (AgentId actor : active) {
      if (g.agent(actor).satisfied) continue;
      const auto meet = meeting_draw(g, actor, meet_rng);
      if (!meet) continue;
      const auto [met, via] = *meet;
      const TypeProfile& profile = g.config().profiles[g.agent(actor).type_id];
      const bool linked = linking_step(g, actor, met, profile);
      if (config.options.record_events)
        traj.events.push_back({t, actor, met, via, linked});
      if (g.agent(actor).satisfied) ++stale;
    }

    if (stale > 64 && stale * 2 > active.size()) {
      active.erase(std::remove_if(active.begin(), active.end(),
                                  [&](AgentId id) { return g.agent(id).satisfied; }),
                   active.end());
      stale = 0;
    }
  }
  return traj;
}

std::vector<std::uint32_t> detect_potentially_unsatisfied(const SocietyConfig& config) {
  std::vector<std::uint32_t> flagged;
  for (std::uint32_t k = 0; k < config.profiles.size(); ++k) {
    const TypeProfile& p = config.profiles[k];
    if (p.opportunism >= 1.0) {
      const double h = exogenous_homophily_index(p);
      if (h > 0.0 && h < 1.0) flagged.push_back(k);
    }
  }
  return flagged;
}

const char* to_string(MeetVia via) {
  return via == MeetVia::followee_of_followee ? "fof" : "uniform";
}

}  // namespace netform
