// The three stochastic processes (birth, meeting, linking) advanced in
// discrete time. One agent is born per step; every unsatisfied agent then
// draws one meeting against the start-of-step adjacency snapshot and applies
// the myopic link rule.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netform/graph.hpp"
#include "netform/rng.hpp"
#include "netform/utility.hpp"

namespace netform {

enum class MeetVia : std::uint8_t { followee_of_followee, uniform };

struct StepEvent {
  std::uint32_t t = 0;
  AgentId actor = 0;
  AgentId met = 0;
  MeetVia via = MeetVia::uniform;
  bool linked = false;
};

struct Trajectory {
  SocietyConfig config;
  EvolvingGraph graph;
  std::vector<StepEvent> events;  // populated when options.record_events
  std::uint64_t stream_id = 0;
};

// Draws the newborn's type from the societal shares and adds the agent.
AgentId birth_step(EvolvingGraph& g, const SocietyConfig& config, Rng& rng);

// One meeting for `actor` at the current date:
//   - choice set K = followees-of-followees from the start-of-step snapshot;
//   - with probability gamma (K nonempty) the meeting is uniform over K;
//   - otherwise uniform over all alive agents except the actor and the
//     agents it already follows (a uniform draw may still land inside K and
//     then counts as via=uniform).
// Empty candidate pool (t=1, or everyone already followed) -> nullopt.
std::optional<std::pair<AgentId, MeetVia>> meeting_draw(const EvolvingGraph& g,
                                                        AgentId actor, Rng& rng);

// Applies the link rule for an actor that met `met`; forms the edge on a
// positive marginal utility, updates satisfaction and records the ego
// formation time when the actor saturates. Returns whether a link formed.
bool linking_step(EvolvingGraph& g, AgentId actor, AgentId met,
                  const TypeProfile& profile);

// Full run: for t = 1..horizon, birth then one meeting per unsatisfied agent
// in birth order. Deterministic per (config.seed, stream_id).
Trajectory simulate(const SocietyConfig& config, std::uint64_t stream_id = 0);

// Types that can stay unsatisfied forever: fully opportunistic with an
// interior homophily demand (0 < h < 1), which can trap them in choice sets
// holding no acceptable candidates.
std::vector<std::uint32_t> detect_potentially_unsatisfied(const SocietyConfig& config);

const char* to_string(MeetVia via);

}  // namespace netform
