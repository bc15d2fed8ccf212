#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "netform/oracles.hpp"

using namespace netform;

namespace {
TypeProfile sqrt_profile(double a_same, double a_diff, double cost, double gamma = 0.0,
                         double share = 1.0) {
  TypeProfile p;
  p.alpha_same = a_same;
  p.alpha_diff = a_diff;
  p.link_cost = cost;
  p.curve = {CurveFamily::sqrt_like, 2.0};
  p.opportunism = gamma;
  p.pop_share = share;
  return p;
}
}  // namespace

TEST_CASE("expected formation time under extreme homophily") {
  // p = 1/2, L*(0) = 5, gamma = 1/2: 1/p + 4 / ((1-g)p + g) = 2 + 16/3
  const Predicted<double> e = eeft_closed_form(sqrt_profile(1.0, 0.0, 0.45, 0.5, 0.5));
  CHECK(e.regime.ok);
  CHECK(e.value == doctest::Approx(22.0 / 3.0));
  // meetings always inside the choice set: second stage is deterministic
  const Predicted<double> g1 = eeft_closed_form(sqrt_profile(1.0, 0.0, 0.45, 1.0, 0.5));
  CHECK(g1.value == doctest::Approx(2.0 + 4.0));
  // a tolerant type has no closed form here
  CHECK_FALSE(eeft_closed_form(sqrt_profile(1.0, 1.0, 0.45, 0.5, 0.5)).regime.ok);
}

TEST_CASE("formation-time pmf: support, normalization, mean, head mass") {
  const TypeProfile p = sqrt_profile(1.0, 0.0, 0.45, 0.5, 0.5);
  const AnalyticPmf a = eft_pmf_closed_form(p, 400);
  REQUIRE_FALSE(a.pmf.support.empty());
  CHECK(a.pmf.support.front() == 5.0);  // 1 meeting + 4 further links minimum
  CHECK(a.pmf.total_mass() + a.tail_mass == doctest::Approx(1.0));
  CHECK(a.tail_mass < 1e-9);
  CHECK(a.pmf.mean() == doctest::Approx(22.0 / 3.0).epsilon(1e-6));
  // P(T = 5) = p * q^4 with q = (1-g)p + g = 3/4
  CHECK(a.pmf.mass.front() == doctest::Approx(0.5 * std::pow(0.75, 4.0)));
}

TEST_CASE("formation-time pmf degenerates correctly at gamma = 1") {
  const AnalyticPmf a = eft_pmf_closed_form(sqrt_profile(1.0, 0.0, 0.45, 1.0, 0.5), 60);
  // T = G + 4 exactly: mass at k is P(G = k-4) = p (1-p)^{k-5}
  CHECK(a.pmf.support.front() == 5.0);
  CHECK(a.pmf.mass.front() == doctest::Approx(0.5));
  CHECK(a.pmf.mass[1] == doctest::Approx(0.25));
}

TEST_CASE("bonding ceiling is the share-weighted solo optimum") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(2.0, 0.0, 0.9, 0.0, 0.5),
                  sqrt_profile(2.0, 0.0, 0.9, 0.0, 0.5)};
  cfg.horizon = 100;
  const BondingBound bound = optimal_bonding_bound(cfg);
  CHECK(bound.value == doctest::Approx(2.0 * std::sqrt(4.0) - 1.8));
  CHECK(bound.attained_iff_all_extreme);
  cfg.profiles[1] = sqrt_profile(2.0, 1.3, 0.9, 0.0, 0.5);  // interior homophily
  const BondingBound mixed = optimal_bonding_bound(cfg);
  CHECK(mixed.value == doctest::Approx(2.2));
  CHECK_FALSE(mixed.attained_iff_all_extreme);
}

TEST_CASE("mean gregariousness weights the type demands by share") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.6, 0.0, 0.25),    // L* = 3
                  sqrt_profile(1.0, 1.0, 0.45, 0.0, 0.75)};  // L* = 5
  cfg.horizon = 100;
  CHECK(mean_gregariousness(cfg) == doctest::Approx(0.25 * 3 + 0.75 * 5));
}

TEST_CASE("tolerant growth exponent and its regime") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 1.0, 0.7, 1.0, 1.0)};  // L* = 2
  cfg.horizon = 100;
  const Predicted<double> b = tolerant_growth_exponent(cfg);
  CHECK(b.value == doctest::Approx(0.5));
  CHECK(b.regime.ok);
  cfg.profiles[0].alpha_diff = 0.0;  // homophilic: out of regime
  CHECK_FALSE(tolerant_growth_exponent(cfg).regime.ok);
}

TEST_CASE("lambert W lower branch solves w e^w = x") {
  for (double x : {-0.05, -0.1, -0.2, -0.3, -1.0 / std::exp(1.0) + 1e-6}) {
    const double w = lambert_w_m1(x);
    CHECK(w <= -1.0);
    CHECK(w * std::exp(w) == doctest::Approx(x).epsilon(1e-9));
  }
  // defined on the open interval only
  CHECK_THROWS_AS(lambert_w_m1(-1.0 / std::exp(1.0)), std::domain_error);
  CHECK_THROWS_AS(lambert_w_m1(0.0), std::domain_error);
}

TEST_CASE("crossover bound matches the bisection root of its equation") {
  const Predicted<double> bound = crossover_time_bound(10, 2.0, 0.5);
  CHECK(bound.regime.ok);
  CHECK(bound.value > 123.0);
  CHECK(bound.value < 124.0);
  const double root = crossover_time_bisection(10, 2.0, 0.5);
  CHECK(bound.value == doctest::Approx(root).epsilon(1e-9));
  // the i-1 variant solves a slightly different equation, later root
  CHECK(crossover_time_bisection_im1(10, 2.0, 0.5) > root);
  // L_bar = 1 leaves no crossing to bound
  CHECK_FALSE(crossover_time_bound(10, 1.0, 0.5).regime.ok);
}

TEST_CASE("popularity curves pin their anchor points") {
  const Curve log_curve = popularity_log_curve(10, 2.0);
  CHECK(log_curve.at(9.0) == doctest::Approx(0.0));
  CHECK(log_curve.at(90.0) == doctest::Approx(2.0 * std::log(10.0)));
  const Curve floor = popularity_sublinear_bound(10, 0.5);
  CHECK(floor.at(10.0) == doctest::Approx(0.0));
  CHECK(floor.at(40.0) == doctest::Approx((std::pow(4.0, 0.5) - 1.0) / 0.5));
}

TEST_CASE("mean-field popularity law is exponential in the saturation count") {
  const Curve cdf = meanfield_popularity_cdf(sqrt_profile(1.0, 0.0, 0.45));  // L* = 5
  CHECK(cdf.at(0.0) == doctest::Approx(0.0));
  CHECK(cdf.at(5.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(cdf.regime.ok);
  CHECK_FALSE(meanfield_popularity_cdf(sqrt_profile(1.0, 0.0, 0.45, 0.5)).regime.ok);
}

TEST_CASE("per-type growth curves under extreme homophily") {
  const IntolerantGrowth ig = intolerant_growth_curves(sqrt_profile(1.0, 0.0, 0.45), 10);
  CHECK(ig.l_star == 5);
  CHECK(ig.b_theta == doctest::Approx(intolerant_growth_exponent(5)));
  CHECK(ig.regime.ok);
  CHECK(intolerant_growth_exponent(0) == 0.0);
  CHECK(intolerant_growth_exponent(1) == doctest::Approx(1.0));
}

TEST_CASE("connectedness predicate needs an integrating type") {
  SocietyConfig split;
  split.profiles = {sqrt_profile(2.0, 0.0, 0.9, 0.5, 0.5),
                    sqrt_profile(2.0, 0.0, 0.9, 0.5, 0.5)};
  split.horizon = 100;
  CHECK_FALSE(connectedness_predicate(split));
  SocietyConfig glued = split;
  glued.profiles[1] = sqrt_profile(2.0, 1.3, 0.9, 0.5, 0.5);
  CHECK(connectedness_predicate(glued));
  glued.profiles[1].opportunism = 1.0;  // trapped in own-type choice sets
  CHECK_FALSE(connectedness_predicate(glued));
}

TEST_CASE("dominance predictions under extreme homophily") {
  const TypeProfile slow = sqrt_profile(1.0, 0.0, 0.4, 0.5, 0.5);   // L* = 6
  const TypeProfile fast = sqrt_profile(1.0, 0.0, 0.6, 0.5, 0.5);   // L* = 3
  const auto by_lstar = eft_fosd_prediction(slow, 0.5, fast, 0.5);
  CHECK(by_lstar.regime.ok);
  CHECK(by_lstar.value == FosdVerdict::a_dominates);
  const TypeProfile minority = sqrt_profile(1.0, 0.0, 0.45, 0.5, 0.2);
  const TypeProfile majority = sqrt_profile(1.0, 0.0, 0.45, 0.5, 0.8);
  CHECK(eft_fosd_prediction(minority, 0.2, majority, 0.8).value ==
        FosdVerdict::a_dominates);
  const TypeProfile direct = sqrt_profile(1.0, 0.0, 0.45, 0.0, 0.5);
  const TypeProfile curious = sqrt_profile(1.0, 0.0, 0.45, 1.0, 0.5);
  CHECK(eft_fosd_prediction(direct, 0.5, curious, 0.5).value ==
        FosdVerdict::a_dominates);
}

TEST_CASE("the full prediction sheet serializes for any valid society") {
  SocietyConfig cfg;
  cfg.profiles = {sqrt_profile(1.0, 0.0, 0.45, 0.5, 0.6),
                  sqrt_profile(2.0, 1.3, 0.9, 0.0, 0.4)};
  cfg.horizon = 500;
  const auto preds = all_predictions(cfg);
  CHECK(preds.size() >= 6);
  for (const OraclePrediction& p : preds) {
    CHECK_FALSE(p.name.empty());
    CHECK_FALSE(p.kind.empty());
    CHECK_FALSE(p.value_json.empty());
    CHECK(p.value_json.find_first_of("{[-0123456789tfn\"") == 0);
  }
}
