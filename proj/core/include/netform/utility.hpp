// Type-specific utility model: saturating benefit curves, the link-decision
// rule, and everything derivable from the utility alone (gregariousness,
// homophily index).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netform {

enum class CurveFamily : std::uint8_t { sqrt_like, log_like };

// Concave aggregation of per-link benefits: v(0)=0, strictly increasing,
// strictly concave. Two concrete families: scale*sqrt(x) and scale*ln(1+x).
struct AggregationCurve {
  CurveFamily family = CurveFamily::sqrt_like;
  double scale = 1.0;

  friend bool operator==(const AggregationCurve&, const AggregationCurve&) = default;
};

double eval_v(const AggregationCurve& curve, double x);

// All exogenous parameters of one agent type.
struct TypeProfile {
  std::string name;          // label used in reports; defaults to "type<k>"
  double alpha_same = 1.0;   // per-link benefit weight, same type (> 0)
  double alpha_diff = 1.0;   // per-link benefit weight, different type (<= alpha_same)
  double link_cost = 0.5;    // per-link maintenance cost (> 0)
  AggregationCurve curve;
  double opportunism = 0.0;  // probability of meeting inside the choice set
  double pop_share = 1.0;    // birth probability of this type

  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;
};

struct SimOptions {
  bool record_events = false;  // append per-meeting events to the trajectory

  friend bool operator==(const SimOptions&, const SimOptions&) = default;
};

// A society: ordered type profiles (index = type id), run length and seeding.
struct SocietyConfig {
  std::vector<TypeProfile> profiles;
  std::uint32_t horizon = 2;       // one birth per step; |V^t| = t
  std::uint64_t seed = 1;
  std::uint32_t replications = 1;
  SimOptions options;

  friend bool operator==(const SocietyConfig&, const SocietyConfig&) = default;
};

// Net gain of adding one followee of the given kind at the current counts:
//   v(a_s*(n_s + same) + a_d*(n_d + !same)) - v(a_s*n_s + a_d*n_d) - c
double marginal_link_utility(const TypeProfile& profile, std::uint32_t n_same,
                             std::uint32_t n_diff, bool candidate_same_type);

// Myopic rule: link iff the marginal utility is strictly positive. Exact ties
// never link.
bool link_decision(const TypeProfile& profile, std::uint32_t n_same,
                   std::uint32_t n_diff, bool candidate_same_type);

// argmax over integer x >= 0 of v(x*alpha_same + alpha_offset) - x*c, found by
// scanning while the marginal gain stays strictly above the cost (concavity
// makes that the unique maximizer; ties resolve to the smaller x).
std::uint32_t compute_L_star(const TypeProfile& profile, double alpha_offset = 0.0);

// Same program with alpha_diff in place of alpha_same: the number of
// different-type followees the agent would accumulate on its own.
std::uint32_t compute_Lbar_star(const TypeProfile& profile, double alpha_offset = 0.0);

// Minimum long-run fraction of same-type followees this type demands:
//   h = Ls / (Ls + Lbar),  Ls = L*(alpha_diff * Lbar*(0)),  Lbar = Lbar*(0).
// 0 when alpha_diff == alpha_same, 1 when different-type links are worthless.
double exogenous_homophily_index(const TypeProfile& profile);

// Per-agent utility at given followee counts (the quantity the link rule
// maximizes myopically).
double agent_utility(const TypeProfile& profile, std::uint32_t n_same,
                     std::uint32_t n_diff);

std::string to_string(CurveFamily family);

}  // namespace netform
