#include <cmath>

#include "doctest.h"
#include "netform/utility.hpp"

using namespace netform;

namespace {
TypeProfile sqrt_profile(double a_same, double a_diff, double cost, double scale = 2.0) {
  TypeProfile p;
  p.alpha_same = a_same;
  p.alpha_diff = a_diff;
  p.link_cost = cost;
  p.curve = {CurveFamily::sqrt_like, scale};
  return p;
}
}  // namespace

TEST_CASE("aggregation curves are zero at zero, increasing and concave") {
  const AggregationCurve s{CurveFamily::sqrt_like, 2.0};
  const AggregationCurve l{CurveFamily::log_like, 3.0};
  CHECK(eval_v(s, 0.0) == 0.0);
  CHECK(eval_v(l, 0.0) == 0.0);
  CHECK(eval_v(s, 4.0) == doctest::Approx(4.0));
  CHECK(eval_v(l, std::exp(1.0) - 1.0) == doctest::Approx(3.0));
  for (double x : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(eval_v(s, x + 1) > eval_v(s, x));
    CHECK(eval_v(l, x + 1) > eval_v(l, x));
    // decreasing increments
    CHECK(eval_v(s, x + 1) - eval_v(s, x) > eval_v(s, x + 2) - eval_v(s, x + 1));
    CHECK(eval_v(l, x + 1) - eval_v(l, x) > eval_v(l, x + 2) - eval_v(l, x + 1));
  }
}

TEST_CASE("saturation counts for the 2*sqrt benefit family") {
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.6)) == 3);
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.5)) == 4);
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.45)) == 5);
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.4)) == 6);
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.35)) == 8);
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 0.3)) == 11);
  CHECK(compute_L_star(sqrt_profile(2.0, 0.0, 0.9)) == 2);
  CHECK(compute_L_star(sqrt_profile(2.0, 1.5, 0.7)) == 4);
  // prohibitive cost: no link is ever worth it
  CHECK(compute_L_star(sqrt_profile(1.0, 1.0, 5.0)) == 0);
}

TEST_CASE("an existing link shifts the saturation count down by one") {
  const TypeProfile p = sqrt_profile(1.0, 1.0, 0.45);
  CHECK(compute_L_star(p) == 5);
  CHECK(compute_L_star(p, p.alpha_same) == 4);
}

TEST_CASE("cross-type saturation uses the cross weight") {
  CHECK(compute_Lbar_star(sqrt_profile(2.0, 1.3, 0.9)) == 2);
  CHECK(compute_Lbar_star(sqrt_profile(2.0, 1.5, 0.7)) == 3);
  CHECK(compute_Lbar_star(sqrt_profile(2.0, 0.0, 0.9)) == 0);
}

TEST_CASE("link rule is strict: exact ties never link") {
  // 2*sqrt(1) - 2.0 == 0 exactly at the first link
  TypeProfile tie = sqrt_profile(1.0, 1.0, 2.0);
  CHECK(marginal_link_utility(tie, 0, 0, true) == 0.0);
  CHECK_FALSE(link_decision(tie, 0, 0, true));
  tie.link_cost = 1.999;
  CHECK(link_decision(tie, 0, 0, true));
}

TEST_CASE("marginal utility distinguishes same- and cross-type candidates") {
  const TypeProfile p = sqrt_profile(2.0, 1.3, 0.9);
  CHECK(marginal_link_utility(p, 0, 0, true) >
        marginal_link_utility(p, 0, 0, false));
  CHECK(marginal_link_utility(p, 0, 0, false) ==
        doctest::Approx(2.0 * std::sqrt(1.3) - 0.9));
  // saturated agent rejects everything
  CHECK_FALSE(link_decision(p, 2, 0, true));
}

TEST_CASE("homophily index hits its endpoints and interior calibrations") {
  CHECK(exogenous_homophily_index(sqrt_profile(1.0, 1.0, 0.5)) == 0.0);
  CHECK(exogenous_homophily_index(sqrt_profile(1.0, 0.0, 0.5)) == 1.0);
  CHECK(exogenous_homophily_index(sqrt_profile(2.0, 1.3, 0.9)) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(exogenous_homophily_index(sqrt_profile(2.0, 1.5, 0.7)) ==
        doctest::Approx(0.4));
}

TEST_CASE("agent utility at the saturation point matches by hand") {
  const TypeProfile p = sqrt_profile(2.0, 0.0, 0.9);
  CHECK(agent_utility(p, 2, 0) == doctest::Approx(2.0 * std::sqrt(4.0) - 1.8));
  CHECK(agent_utility(p, 0, 0) == 0.0);
  // cross links with zero weight cost without paying
  CHECK(agent_utility(p, 2, 1) < agent_utility(p, 2, 0));
}

TEST_CASE("curve family names round-trip through config text") {
  CHECK(to_string(CurveFamily::sqrt_like) == "sqrt");
  CHECK(to_string(CurveFamily::log_like) == "log");
}
