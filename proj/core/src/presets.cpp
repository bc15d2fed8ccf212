#include "netform/presets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netform {

namespace {

// All presets use v(x) = 2*sqrt(x). With alpha_same = 1 the cost dial alone
// pins gregariousness: c = 0.6 -> 3, 0.5 -> 4, 0.45 -> 5, 0.4 -> 6 links.
TypeProfile profile(std::string name, double a_same, double a_diff, double cost,
                    double gamma, double share) {
  TypeProfile p;
  p.name = std::move(name);
  p.alpha_same = a_same;
  p.alpha_diff = a_diff;
  p.link_cost = cost;
  p.curve = {CurveFamily::sqrt_like, 2.0};
  p.opportunism = gamma;
  p.pop_share = share;
  return p;
}

// Interior-homophily calibrations (same curve):
//   alpha 2/1.3, cost 0.9 -> demands 1 own-type link on top of 2 cross links (h = 1/3)
//   alpha 2/1.5, cost 0.7 -> demands 2 own-type links on top of 3 cross links (h = 2/5)
TypeProfile interior_third(std::string name, double gamma, double share) {
  return profile(std::move(name), 2.0, 1.3, 0.9, gamma, share);
}

std::uint32_t scaled(std::uint32_t base, double scale, std::uint32_t lo) {
  const double v = std::round(base * scale);
  return std::max<std::uint32_t>(lo, v > 4e9 ? 4000000000u : static_cast<std::uint32_t>(v));
}

SocietyConfig society(std::vector<TypeProfile> profiles, std::uint32_t horizon,
                      std::uint32_t reps, std::uint64_t seed, double scale) {
  SocietyConfig cfg;
  cfg.profiles = std::move(profiles);
  cfg.horizon = scaled(horizon, scale, 50);
  cfg.replications = scaled(reps, scale, 2);
  cfg.seed = seed;
  return cfg;
}

std::vector<std::uint32_t> quarter_checkpoints(std::uint32_t horizon) {
  return {horizon / 4, horizon / 2, (3 * horizon) / 4, horizon};
}

Preset build(const std::string& name, double scale) {
  Preset ps;
  ps.name = name;

  if (name == "fig3a") {
    ps.description =
        "ego-network formation times: identical-weights society vs an "
        "own-type-only society with opportunistic meetings";
    ps.backs = {"deterministic-eft", "eeft-closed-form", "eft-pmf"};
    ps.variants.push_back(
        {"uniform-weights",
         society({profile("plain", 1.0, 1.0, 0.45, 0.0, 1.0)}, 2000, 20, 1003001, scale)});
    ps.variants.push_back(
        {"own-type-only",
         society({profile("a", 1.0, 0.0, 0.45, 0.5, 0.5),
                  profile("b", 1.0, 0.0, 0.45, 0.5, 0.5)},
                 2000, 20, 1003001, scale)});
    ps.metrics.collect_eft = true;
    return ps;
  }

  if (name == "fig3b") {
    ps.description = "formation-time CDFs with meetings drawn uniformly vs from the choice set";
    ps.backs = {"eft-fosd"};
    for (double gamma : {0.0, 1.0})
      ps.variants.push_back(
          {gamma == 0.0 ? "gamma0" : "gamma1",
           society({profile("a", 1.0, 0.0, 0.45, gamma, 0.5),
                    profile("b", 1.0, 0.0, 0.45, gamma, 0.5)},
                   2000, 40, 1003002, scale)});
    ps.metrics.collect_eft = true;
    return ps;
  }

  if (name == "fig3c") {
    ps.description = "formation-time CDFs for a minority vs a majority type";
    ps.backs = {"eft-fosd"};
    ps.variants.push_back({"shares-20-80",
                           society({profile("minority", 1.0, 0.0, 0.45, 0.5, 0.2),
                                    profile("majority", 1.0, 0.0, 0.45, 0.5, 0.8)},
                                   2000, 40, 1003003, scale)});
    ps.metrics.collect_eft = true;
    return ps;
  }

  if (name == "fig4") {
    ps.description =
        "average bonding utility against its population ceiling as own-type "
        "preference weakens";
    ps.backs = {"structural-holes"};
    ps.variants.push_back({"both-own-type-only",
                           society({profile("a", 2.0, 0.0, 0.9, 0.0, 0.5),
                                    profile("b", 2.0, 0.0, 0.9, 0.0, 0.5)},
                                   3000, 30, 1004001, scale)});
    ps.variants.push_back({"one-mixed-type",
                           society({profile("a", 2.0, 0.0, 0.9, 0.0, 0.5),
                                    interior_third("b", 0.0, 0.5)},
                                   3000, 30, 1004001, scale)});
    ps.variants.push_back({"both-mixed",
                           society({interior_third("a", 0.0, 0.5),
                                    interior_third("b", 0.0, 0.5)},
                                   3000, 30, 1004001, scale)});
    ps.metrics.checkpoints = {100, 250, 500, 1000, 2000, 3000};
    ps.metrics.omega_series = true;
    return ps;
  }

  if (name == "fig5") {
    ps.description =
        "in-degree trajectories of an early agent without and with fully "
        "opportunistic meetings (paired seeds)";
    ps.backs = {"log-growth", "sublinear-bound", "crossover"};
    for (double gamma : {0.0, 1.0})
      ps.variants.push_back(
          {gamma == 0.0 ? "gamma0" : "gamma1",
           society({profile("plain", 1.0, 1.0, 0.7, gamma, 1.0)}, 2000, 60, 1005001, scale)});
    ps.metrics.tracked_agents = {5, 10, 20};
    ps.metrics.collect_eft = false;
    return ps;
  }

  if (name == "fig6") {
    ps.description = "in-degree distributions for a 3-link vs a 6-link own-type-only type";
    ps.backs = {"popularity-fosd"};
    ps.variants.push_back({"L3-vs-L6",
                           society({profile("three-links", 1.0, 0.0, 0.6, 0.0, 0.5),
                                    profile("six-links", 1.0, 0.0, 0.4, 0.0, 0.5)},
                                   3000, 30, 1006001, scale)});
    ps.metrics.checkpoints = {1000, 3000};
    ps.metrics.degree_histograms = true;
    ps.metrics.collect_eft = false;
    return ps;
  }

  if (name == "fig8a" || name == "fig8b" || name == "fig8c") {
    ps.backs = {"centrality-statics"};
    ps.metrics.betweenness_at_end = true;
    ps.metrics.collect_eft = false;
    if (name == "fig8a") {
      ps.description = "average betweenness: 3-link vs 6-link own-type-only types";
      ps.variants.push_back({"L3-vs-L6",
                             society({profile("three-links", 1.0, 0.0, 0.6, 0.0, 0.5),
                                      profile("six-links", 1.0, 0.0, 0.4, 0.0, 0.5)},
                                     1000, 50, 1008001, scale)});
    } else if (name == "fig8b") {
      ps.description = "average betweenness: majority vs minority of the same type shape";
      ps.variants.push_back({"shares-70-30",
                             society({profile("majority", 1.0, 0.0, 0.6, 0.0, 0.7),
                                      profile("minority", 1.0, 0.0, 0.6, 0.0, 0.3)},
                                     1000, 50, 1008002, scale)});
    } else {
      ps.description = "average betweenness: uniform meetings vs choice-set meetings";
      ps.variants.push_back({"gamma0-vs-gamma1",
                             society({profile("uniform-meeting", 1.0, 0.0, 0.6, 0.0, 0.5),
                                      profile("choice-set", 1.0, 0.0, 0.6, 1.0, 0.5)},
                                     1000, 50, 1008003, scale)});
    }
    return ps;
  }

  if (name == "fig9") {
    ps.description =
        "two own-type-only blocks plus a small mixed type that can bridge "
        "them; bridging falls away as that type turns opportunistic";
    ps.backs = {"bridging-scenarios"};
    for (double gamma3 : {0.0, 0.1, 1.0}) {
      std::string label = "gamma3-";
      label += gamma3 == 0.0 ? "0" : (gamma3 == 0.1 ? "01" : "1");
      ps.variants.push_back(
          {label, society({profile("block-a", 2.0, 0.0, 0.9, 1.0, 0.45),
                           profile("block-b", 2.0, 0.0, 0.9, 1.0, 0.45),
                           interior_third("mixer", gamma3, 0.1)},
                          1000, 50, 1009001, scale)});
    }
    ps.metrics.betweenness_at_end = true;
    ps.metrics.collect_eft = false;
    return ps;
  }

  if (name == "fig11") {
    ps.description =
        "mostly mixed society with a small own-type-only clique that ends up "
        "the central hub";
    ps.backs = {"bridging-scenarios"};
    ps.variants.push_back({"hub",
                           society({interior_third("mixed-a", 0.0, 0.45),
                                    interior_third("mixed-b", 0.0, 0.45),
                                    profile("clique", 2.0, 0.0, 0.9, 0.0, 0.1)},
                                   1000, 50, 1011001, scale)});
    ps.metrics.betweenness_at_end = true;
    ps.metrics.collect_eft = false;
    return ps;
  }

  if (name == "prefattach") {
    ps.description =
        "fully opportunistic uniform-weights society; in-degree increments "
        "should favor the already-popular";
    ps.backs = {"pref-attach"};
    ps.variants.push_back(
        {"gamma1",
         society({profile("plain", 1.0, 1.0, 0.5, 1.0, 1.0)}, 2000, 20, 1010001, scale)});
    ps.metrics.keep_trajectories = true;
    ps.metrics.collect_eft = false;
    return ps;
  }

  if (name == "connectivity") {
    ps.description =
        "two own-type-only blocks with and without a mixed type gluing the "
        "network into one component";
    ps.backs = {"connectedness", "structural-holes"};
    ps.variants.push_back({"bridged",
                           society({profile("block-a", 2.0, 0.0, 0.9, 0.5, 0.4),
                                    profile("block-b", 2.0, 0.0, 0.9, 0.5, 0.4),
                                    interior_third("mixer", 0.5, 0.2)},
                                   2000, 200, 1012001, scale)});
    ps.variants.push_back({"separate",
                           society({profile("block-a", 2.0, 0.0, 0.9, 0.5, 0.5),
                                    profile("block-b", 2.0, 0.0, 0.9, 0.5, 0.5)},
                                   2000, 200, 1012001, scale)});
    ps.metrics.omega_series = true;
    ps.metrics.collect_eft = false;
    return ps;
  }

  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig3a", "fig3b", "fig3c", "fig4",  "fig5",       "fig6",        "fig8a",
      "fig8b", "fig8c", "fig9",  "fig11", "prefattach", "connectivity"};
  return names;
}

Preset make_preset(const std::string& name, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("scale must be a positive number");
  Preset ps = build(name, scale);
  if (ps.metrics.checkpoints.empty() && !ps.variants.empty())
    ps.metrics.checkpoints = quarter_checkpoints(ps.variants.front().config.horizon);
  return ps;
}

}  // namespace netform
