// Closed-form predictions about the network process, each tagged with the
// parameter regime it is valid in, so simulation output can be scored against
// theory (and comparisons outside regime flagged instead of silently run).
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netform/metrics.hpp"
#include "netform/utility.hpp"

namespace netform {

struct Regime {
  bool ok = true;
  std::string requirement;  // human-readable description of the valid regime
};

template <typename T>
struct Predicted {
  T value{};
  Regime regime;
};

struct OraclePrediction {
  std::string name;        // e.g. "eeft", "crossover-bound"
  std::string kind;        // scalar | pmf | curve | bound | predicate
  std::string regime;      // validity description
  bool in_regime = true;
  std::string value_json;  // serialized payload
};

// Expected ego formation time of a type under extreme homophily:
//   1/p + L*(alpha_same) / ((1-gamma)p + gamma),
// where L*(alpha_same) = L*(0)-1 is the residual demand after the first link.
Predicted<double> eeft_closed_form(const TypeProfile& profile);

// Exact formation-time pmf under extreme homophily: T = G + W with
// G ~ Geometric(p) (steps to the first same-type meeting) and W ~ negative
// binomial counting trials to L*(0)-1 further successes at rate
// (1-gamma)p + gamma. Truncated at max_T; tail mass reported.
struct AnalyticPmf {
  EmpiricalPmf pmf;
  double tail_mass = 0.0;
  Regime regime;
};
AnalyticPmf eft_pmf_closed_form(const TypeProfile& profile, std::uint32_t max_T);

// Society-wide optimum of average bonding utility, attained in the long run
// exactly when every type is extremely homophilic:
//   sum_k p_k (v_k(alpha_same_k * L_k*(0)) - c_k L_k*(0)).
struct BondingBound {
  double value = 0.0;
  bool attained_iff_all_extreme = false;  // true when every type has h = 1
};
BondingBound optimal_bonding_bound(const SocietyConfig& config);

// Population-weighted mean gregariousness, sum_k p_k L_k*(0).
double mean_gregariousness(const SocietyConfig& config);

// Growth exponent for fully opportunistic tolerant societies,
// b = sum_k p_k / L_k*(0).
Predicted<double> tolerant_growth_exponent(const SocietyConfig& config);

// Expected popularity curve in tolerant non-opportunistic societies:
// t -> L_bar * log(t / (i-1)), valid for birth dates i >= 2.
struct Curve {
  std::function<double(double)> at;
  Regime regime;
};
Curve popularity_log_curve(AgentId i, double L_bar);

// Lower bound in tolerant fully opportunistic societies:
// t -> ((t/i)^b - 1) / b.
Curve popularity_sublinear_bound(AgentId i, double b);

// Lower branch of the Lambert W function on (-1/e, 0); |w e^w - x| <= 1e-12.
double lambert_w_m1(double x);

// Upper bound on the date an opportunistic society's popularity overtakes a
// non-opportunistic one: i * (-L_bar * W_-1(-(1/L_bar) e^{-1/L_bar}))^{1/b}.
// Requires L_bar > 1.
Predicted<double> crossover_time_bound(AgentId i, double L_bar, double b);

// Independent root: bisection of L_bar*log(t/i) = ((t/i)^b - 1)/b on t > i,
// the transcendental the closed form inverts. Also exposes the variant with
// log(t/(i-1)) for visibility (no closed form matches it exactly).
double crossover_time_bisection(AgentId i, double L_bar, double b);
double crossover_time_bisection_im1(AgentId i, double L_bar, double b);

// Per-type growth in extremely homophilic societies: log curve for gamma=0,
// and the opportunistic lower bound with the per-type exponent
//   b = sum_{m=0}^{L*-1} [L*/((m+1)L*-m)] prod_{v=1}^{m} (1 - 1/(vL*-(v-1))).
struct IntolerantGrowth {
  std::uint32_t l_star = 0;
  double b_theta = 0.0;
  Curve log_curve;         // gamma = 0
  Curve sublinear_bound;   // gamma = 1
  Regime regime;
};
IntolerantGrowth intolerant_growth_curves(const TypeProfile& profile, AgentId i);
double intolerant_growth_exponent(std::uint32_t l_star);

// Mean-field popularity CDF for extremely homophilic, non-opportunistic
// types: d -> 1 - exp(-d / L*(0)).
Curve meanfield_popularity_cdf(const TypeProfile& profile);

// The network connects into a single component almost surely iff some type
// has h < 1 and gamma < 1.
bool connectedness_predicate(const SocietyConfig& config);

// Predicted dominance between the formation-time distributions of two
// parameterizations (valid under extreme homophily): formation time rises
// with gregariousness, falls with population share and with opportunism.
Predicted<FosdVerdict> eft_fosd_prediction(const TypeProfile& a, double share_a,
                                           const TypeProfile& b, double share_b);

// Everything above evaluated on a society, serialized for emission.
std::vector<OraclePrediction> all_predictions(const SocietyConfig& config);

}  // namespace netform
