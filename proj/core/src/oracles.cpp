#include "netform/oracles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netform {

namespace {

Regime homophilic_regime(const TypeProfile& profile) {
  const double h = exogenous_homophily_index(profile);
  Regime r;
  r.requirement = "extreme homophily (h = 1) for the type";
  r.ok = (h == 1.0);
  return r;
}

}  // namespace

Predicted<double> eeft_closed_form(const TypeProfile& profile) {
  Predicted<double> out;
  out.regime = homophilic_regime(profile);
  const std::uint32_t l0 = compute_L_star(profile, 0.0);
  if (l0 == 0) {
    out.regime.ok = false;
    out.regime.requirement += "; nondegenerate gregariousness (L*(0) >= 1)";
    out.value = 0.0;
    return out;
  }
  const double p = profile.pop_share;
  const double gamma = profile.opportunism;
  const double residual = compute_L_star(profile, profile.alpha_same);
  out.value = 1.0 / p + residual / ((1.0 - gamma) * p + gamma);
  return out;
}

AnalyticPmf eft_pmf_closed_form(const TypeProfile& profile, std::uint32_t max_T) {
  AnalyticPmf out;
  out.regime = homophilic_regime(profile);
  const std::uint32_t l0 = compute_L_star(profile, 0.0);
  if (l0 == 0) {
    out.pmf.support = {0.0};
    out.pmf.mass = {1.0};
    out.pmf.n = 0;
    return out;
  }
  const double p = profile.pop_share;
  const double q = (1.0 - profile.opportunism) * p + profile.opportunism;
  const std::uint32_t r = l0 - 1;  // successes still needed after the first

  // First stage: P(G = n) = (1-p)^{n-1} p for n >= 1.
  // Second stage: P(W = n) = C(n-1, r-1) q^r (1-q)^{n-r} for n >= r (point
  // mass at 0 when r = 0). Convolve up to max_T.
  std::vector<double> g(max_T + 1, 0.0), w(max_T + 1, 0.0);
  for (std::uint32_t n = 1; n <= max_T; ++n)
    g[n] = std::pow(1.0 - p, n - 1.0) * p;
  if (r == 0) {
    w[0] = 1.0;
  } else {
    for (std::uint32_t n = r; n <= max_T; ++n) {
      const double logc = std::lgamma(n) - std::lgamma(r) - std::lgamma(n - r + 1.0);
      if (n == r)
        w[n] = std::exp(logc + r * std::log(q));
      else if (q < 1.0)  // q = 1 puts all second-stage mass on n = r
        w[n] = std::exp(logc + r * std::log(q) + (n - r) * std::log1p(-q));
    }
  }

  double total = 0.0;
  for (std::uint32_t t = 1; t <= max_T; ++t) {
    double mass = 0.0;
    for (std::uint32_t n1 = 1; n1 + r <= t; ++n1) mass += g[n1] * w[t - n1];
    if (mass > 0.0) {
      out.pmf.support.push_back(static_cast<double>(t));
      out.pmf.mass.push_back(mass);
      total += mass;
    }
  }
  out.tail_mass = 1.0 - total;
  out.pmf.n = 0;  // analytic, not sample-based
  return out;
}

BondingBound optimal_bonding_bound(const SocietyConfig& config) {
  BondingBound out;
  out.attained_iff_all_extreme = true;
  for (const TypeProfile& p : config.profiles) {
    const std::uint32_t l0 = compute_L_star(p, 0.0);
    out.value += p.pop_share * agent_utility(p, l0, 0);
    if (exogenous_homophily_index(p) != 1.0) out.attained_iff_all_extreme = false;
  }
  return out;
}

double mean_gregariousness(const SocietyConfig& config) {
  double acc = 0.0;
  for (const TypeProfile& p : config.profiles)
    acc += p.pop_share * compute_L_star(p, 0.0);
  return acc;
}

Predicted<double> tolerant_growth_exponent(const SocietyConfig& config) {
  Predicted<double> out;
  out.regime.requirement =
      "tolerant society (h = 0 for all types) with L*(0) >= 1 everywhere";
  double acc = 0.0;
  for (const TypeProfile& p : config.profiles) {
    const std::uint32_t l0 = compute_L_star(p, 0.0);
    if (l0 == 0) {
      out.regime.ok = false;
      continue;
    }
    if (exogenous_homophily_index(p) != 0.0) out.regime.ok = false;
    acc += p.pop_share / l0;
  }
  out.value = acc;
  return out;
}

Curve popularity_log_curve(AgentId i, double L_bar) {
  Curve c;
  c.regime.requirement =
      "tolerant (h = 0), non-opportunistic (gamma = 0) society; birth date >= 2";
  if (i < 2) {
    c.regime.ok = false;
    c.at = [](double) { return 0.0; };
    return c;
  }
  const double im1 = static_cast<double>(i) - 1.0;
  c.at = [L_bar, im1](double t) { return L_bar * std::log(t / im1); };
  return c;
}

Curve popularity_sublinear_bound(AgentId i, double b) {
  Curve c;
  c.regime.requirement =
      "tolerant (h = 0), fully opportunistic (gamma = 1) society";
  if (b <= 0.0) {
    c.regime.ok = false;
    c.at = [](double) { return 0.0; };
    return c;
  }
  const double di = static_cast<double>(i);
  c.at = [b, di](double t) { return (std::pow(t / di, b) - 1.0) / b; };
  return c;
}

double lambert_w_m1(double x) {
  constexpr double kInvE = -0.36787944117144233;  // -1/e
  if (!(x > kInvE && x < 0.0))
    throw std::domain_error("lambert_w_m1: argument outside (-1/e, 0)");

  // Initial guess: branch-point series near -1/e, log-log asymptote near 0.
  double w;
  const double q = 2.0 * (1.0 + std::exp(1.0) * x);
  if (q < 0.25) {
    const double s = -std::sqrt(q);
    w = -1.0 + s - s * s / 3.0 + 11.0 / 72.0 * s * s * s;
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-13 * std::max(std::abs(x), 1e-300)) break;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    w -= f / denom;  // Halley step
  }
  if (std::abs(w * std::exp(w) - x) > 1e-12)
    throw std::runtime_error("lambert_w_m1: did not converge");
  return w;
}

Predicted<double> crossover_time_bound(AgentId i, double L_bar, double b) {
  Predicted<double> out;
  out.regime.requirement =
      "tolerant society, mean gregariousness L_bar > 1, opportunistic exponent b > 0";
  if (L_bar <= 1.0 || b <= 0.0) {
    out.regime.ok = false;
    out.value = 0.0;
    return out;
  }
  const double arg = -(1.0 / L_bar) * std::exp(-1.0 / L_bar);
  const double w = lambert_w_m1(arg);
  out.value = static_cast<double>(i) * std::pow(-L_bar * w, 1.0 / b);
  return out;
}

namespace {

double bisect_crossover(double i_log, double i_pow, double L_bar, double b) {
  // Root of f(t) = L_bar*log(t/i_log) - ((t/i_pow)^b - 1)/b beyond the early
  // crossing: f > 0 once the log curve leads, f < 0 again when the power
  // curve overtakes. Bracket from t = i_pow+1 upward by doubling.
  const auto f = [&](double t) {
    return L_bar * std::log(t / i_log) - (std::pow(t / i_pow, b) - 1.0) / b;
  };
  double lo = i_pow + 1.0;
  while (f(lo) <= 0.0) {
    lo += 0.25;
    if (lo > i_pow * 4.0)
      throw std::runtime_error("crossover bisection: no positive stretch found");
  }
  double hi = lo * 2.0;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e18) throw std::runtime_error("crossover bisection: no sign change");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) / hi < 1e-14) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double crossover_time_bisection(AgentId i, double L_bar, double b) {
  return bisect_crossover(static_cast<double>(i), static_cast<double>(i), L_bar, b);
}

double crossover_time_bisection_im1(AgentId i, double L_bar, double b) {
  if (i < 2) throw std::domain_error("crossover bisection: birth date must be >= 2");
  return bisect_crossover(static_cast<double>(i) - 1.0, static_cast<double>(i),
                          L_bar, b);
}

double intolerant_growth_exponent(std::uint32_t l_star) {
  if (l_star == 0) return 0.0;
  const double L = static_cast<double>(l_star);
  double sum = 0.0;
  double prod = 1.0;  // prod_{v=1}^{m} (1 - 1/(vL - (v-1)))
  for (std::uint32_t m = 0; m < l_star; ++m) {
    if (m >= 1) {
      const double v = static_cast<double>(m);
      prod *= 1.0 - 1.0 / (v * L - (v - 1.0));
    }
    sum += L / ((m + 1.0) * L - m) * prod;
  }
  return sum;
}

IntolerantGrowth intolerant_growth_curves(const TypeProfile& profile, AgentId i) {
  IntolerantGrowth out;
  out.regime.requirement = "extremely homophilic type (h = 1), birth date >= 2";
  out.regime.ok = (exogenous_homophily_index(profile) == 1.0) && i >= 2;
  out.l_star = compute_L_star(profile, 0.0);
  out.b_theta = intolerant_growth_exponent(out.l_star);

  const double im1 = std::max(1.0, static_cast<double>(i) - 1.0);
  const double L = static_cast<double>(out.l_star);
  out.log_curve.regime.requirement = "gamma = 0 within the extreme-homophily regime";
  out.log_curve.regime.ok = out.regime.ok && profile.opportunism == 0.0;
  out.log_curve.at = [L, im1](double t) { return L * std::log(t / im1); };

  const double b = out.b_theta;
  const double di = static_cast<double>(i);
  out.sublinear_bound.regime.requirement =
      "gamma = 1 within the extreme-homophily regime";
  out.sublinear_bound.regime.ok = out.regime.ok && profile.opportunism == 1.0;
  if (b > 0.0)
    out.sublinear_bound.at = [b, di](double t) {
      return (std::pow(t / di, b) - 1.0) / b;
    };
  else
    out.sublinear_bound.at = [](double) { return 0.0; };
  return out;
}

Curve meanfield_popularity_cdf(const TypeProfile& profile) {
  Curve c;
  c.regime.requirement =
      "extremely homophilic (h = 1), non-opportunistic (gamma = 0) type at large t";
  c.regime.ok = (exogenous_homophily_index(profile) == 1.0) &&
                profile.opportunism == 0.0;
  const double L = compute_L_star(profile, 0.0);
  if (L <= 0.0) {
    c.regime.ok = false;
    c.at = [](double) { return 1.0; };
    return c;
  }
  c.at = [L](double d) { return 1.0 - std::exp(-d / L); };
  return c;
}

bool connectedness_predicate(const SocietyConfig& config) {
  for (const TypeProfile& p : config.profiles) {
    if (exogenous_homophily_index(p) < 1.0 && p.opportunism < 1.0) return true;
  }
  return false;
}

Predicted<FosdVerdict> eft_fosd_prediction(const TypeProfile& a, double share_a,
                                           const TypeProfile& b, double share_b) {
  Predicted<FosdVerdict> out;
  out.regime.requirement = "extreme homophily (h = 1) for both parameterizations";
  out.regime.ok = exogenous_homophily_index(a) == 1.0 &&
                  exogenous_homophily_index(b) == 1.0;

  // Formation time is stochastically increasing in L*(0) and decreasing in
  // population share and in opportunism. Combine the per-parameter signs;
  // conflicting directions make the comparison undecided.
  int direction = 0;  // +1: a larger, -1: b larger
  auto fold = [&](int sign) {
    if (sign == 0) return true;
    if (direction == 0) direction = sign;
    return direction == sign;
  };
  const int l_sign = (compute_L_star(a, 0.0) > compute_L_star(b, 0.0)) ? +1
                     : (compute_L_star(a, 0.0) < compute_L_star(b, 0.0)) ? -1 : 0;
  const int p_sign = (share_a < share_b) ? +1 : (share_a > share_b) ? -1 : 0;
  const int g_sign = (a.opportunism < b.opportunism) ? +1
                     : (a.opportunism > b.opportunism) ? -1 : 0;
  bool consistent = fold(l_sign) && fold(p_sign) && fold(g_sign);
  if (!consistent) {
    out.regime.ok = false;
    out.regime.requirement += "; parameter differences pull in one direction";
    out.value = FosdVerdict::neither;
    return out;
  }
  out.value = direction > 0   ? FosdVerdict::a_dominates
              : direction < 0 ? FosdVerdict::b_dominates
                              : FosdVerdict::neither;
  return out;
}

namespace {

std::string json_escape_minimal(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string scalar_json(double v) {
  if (!std::isfinite(v)) return "null";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<OraclePrediction> all_predictions(const SocietyConfig& config) {
  std::vector<OraclePrediction> out;
  const auto add = [&](const std::string& name, const std::string& kind,
                       const Regime& regime, const std::string& payload) {
    out.push_back({name, kind, regime.requirement, regime.ok, payload});
  };

  for (std::uint32_t k = 0; k < config.profiles.size(); ++k) {
    const TypeProfile& p = config.profiles[k];
    const std::string suffix = "[type " + std::to_string(k) + "]";

    const auto eeft = eeft_closed_form(p);
    add("eeft " + suffix, "scalar", eeft.regime, scalar_json(eeft.value));

    const auto growth = intolerant_growth_curves(p, 2);
    add("homophilic-growth-exponent " + suffix, "scalar", growth.regime,
        scalar_json(growth.b_theta));

    const auto mf = meanfield_popularity_cdf(p);
    add("meanfield-popularity-cdf " + suffix, "curve", mf.regime,
        "\"d -> 1 - exp(-d/" + std::to_string(compute_L_star(p, 0.0)) + ")\"");

    Regime derived;
    derived.requirement = "derived from the utility alone";
    add("homophily-index " + suffix, "scalar", derived,
        scalar_json(exogenous_homophily_index(p)));
    add("gregariousness " + suffix, "scalar", derived,
        scalar_json(compute_L_star(p, 0.0)));
  }

  const BondingBound bound = optimal_bonding_bound(config);
  Regime always;
  always.requirement = "upper bound at any date; attained in the limit iff h = 1 for all types";
  add("optimal-bonding-bound", "bound", always, scalar_json(bound.value));

  const auto b = tolerant_growth_exponent(config);
  add("tolerant-growth-exponent", "scalar", b.regime, scalar_json(b.value));

  Regime lbar_regime;
  lbar_regime.requirement = "tolerant (h = 0), gamma = 0 log growth coefficient";
  add("mean-gregariousness", "scalar", lbar_regime,
      scalar_json(mean_gregariousness(config)));

  Regime pred_regime;
  pred_regime.requirement = "unconditional";
  add("connects-almost-surely", "predicate", pred_regime,
      connectedness_predicate(config) ? "true" : "false");

  for (auto& pr : out) pr.name = json_escape_minimal(pr.name);
  return out;
}

}  // namespace netform
