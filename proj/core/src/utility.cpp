#include "netform/utility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace netform {

double eval_v(const AggregationCurve& curve, double x) {
  if (x < 0.0) throw std::domain_error("eval_v: negative argument");
  switch (curve.family) {
    case CurveFamily::sqrt_like:
      return curve.scale * std::sqrt(x);
    case CurveFamily::log_like:
      return curve.scale * std::log1p(x);
  }
  throw std::logic_error("eval_v: unknown curve family");
}

double marginal_link_utility(const TypeProfile& profile, std::uint32_t n_same,
                             std::uint32_t n_diff, bool candidate_same_type) {
  const double base =
      profile.alpha_same * n_same + profile.alpha_diff * n_diff;
  const double gained = candidate_same_type ? profile.alpha_same : profile.alpha_diff;
  return eval_v(profile.curve, base + gained) - eval_v(profile.curve, base) -
         profile.link_cost;
}

bool link_decision(const TypeProfile& profile, std::uint32_t n_same,
                   std::uint32_t n_diff, bool candidate_same_type) {
  return marginal_link_utility(profile, n_same, n_diff, candidate_same_type) > 0.0;
}

namespace {

// Shared scan: first x where v(x*step + offset) stops gaining more than the
// cost. Strict concavity of v makes the marginal gain strictly decreasing, so
// this is the unique argmax (ties stop the scan, i.e. resolve to smaller x).
std::uint32_t scan_saturation(const AggregationCurve& curve, double step,
                              double offset, double cost) {
  if (step <= 0.0) return 0;
  constexpr std::uint32_t kScanCap = 100'000'000;
  std::uint32_t x = 0;
  while (x < kScanCap) {
    const double gain = eval_v(curve, offset + (x + 1.0) * step) -
                        eval_v(curve, offset + x * step);
    if (!(gain - cost > 0.0)) break;
    ++x;
  }
  if (x == kScanCap)
    throw std::runtime_error("saturation scan did not terminate; curve not concave enough");
  return x;
}

}  // namespace

std::uint32_t compute_L_star(const TypeProfile& profile, double alpha_offset) {
  if (alpha_offset < 0.0) throw std::domain_error("compute_L_star: negative offset");
  return scan_saturation(profile.curve, profile.alpha_same, alpha_offset,
                         profile.link_cost);
}

std::uint32_t compute_Lbar_star(const TypeProfile& profile, double alpha_offset) {
  if (alpha_offset < 0.0) throw std::domain_error("compute_Lbar_star: negative offset");
  if (profile.alpha_diff <= 0.0) return 0;
  return scan_saturation(profile.curve, profile.alpha_diff, alpha_offset,
                         profile.link_cost);
}

double exogenous_homophily_index(const TypeProfile& profile) {
  if (profile.alpha_diff == profile.alpha_same) return 0.0;
  if (profile.alpha_diff <= 0.0) return 1.0;
  const std::uint32_t lbar = compute_Lbar_star(profile, 0.0);
  const std::uint32_t ls = compute_L_star(profile, profile.alpha_diff * lbar);
  if (ls + lbar == 0) {
    // Degenerate: the type never links at all; same-type demand is vacuous.
    return 1.0;
  }
  return static_cast<double>(ls) / static_cast<double>(ls + lbar);
}

double agent_utility(const TypeProfile& profile, std::uint32_t n_same,
                     std::uint32_t n_diff) {
  const double base =
      profile.alpha_same * n_same + profile.alpha_diff * n_diff;
  return eval_v(profile.curve, base) -
         profile.link_cost * (static_cast<double>(n_same) + n_diff);
}

std::string to_string(CurveFamily family) {
  return family == CurveFamily::sqrt_like ? "sqrt" : "log";
}

}  // namespace netform
