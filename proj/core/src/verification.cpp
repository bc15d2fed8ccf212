#include "netform/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netform/experiment.hpp"
#include "netform/graph.hpp"
#include "netform/io.hpp"
#include "netform/metrics.hpp"
#include "netform/oracles.hpp"
#include "netform/presets.hpp"
#include "netform/rng.hpp"
#include "netform/utility.hpp"

namespace netform {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

constexpr std::uint64_t kBootstrapSeed = 0xACCE55;

TypeProfile prof(std::string name, double a_same, double a_diff, double cost,
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

SocietyConfig soc(std::vector<TypeProfile> profiles, std::uint32_t horizon,
                  std::uint32_t reps, std::uint64_t seed) {
  SocietyConfig cfg;
  cfg.profiles = std::move(profiles);
  cfg.horizon = horizon;
  cfg.replications = reps;
  cfg.seed = seed;
  return cfg;
}

std::string fd(double x) { return format_double(x); }

struct EftPool {
  std::vector<double> samples;
  std::uint64_t unsatisfied = 0;
};

EftPool pool_eft(const StudyResult& r, const std::set<std::uint32_t>& types,
                 AgentId lo, AgentId hi) {
  EftPool pool;
  for (const RepResult& rep : r.reps)
    for (const EftRecord& e : rep.eft) {
      if (e.agent < lo || e.agent > hi || !types.count(e.type_id)) continue;
      if (e.satisfied) pool.samples.push_back(e.value);
      else ++pool.unsatisfied;
    }
  return pool;
}

struct CurveStats {
  std::vector<double> mean, se;  // index t-1
};

CurveStats curve_stats(const StudyResult& r, std::size_t tracked_idx) {
  CurveStats cs;
  if (r.reps.empty()) return cs;
  const std::size_t T = r.reps.front().tracked_popularity.at(tracked_idx).size();
  const double n = static_cast<double>(r.reps.size());
  cs.mean.assign(T, 0.0);
  cs.se.assign(T, 0.0);
  for (const RepResult& rep : r.reps)
    for (std::size_t t = 0; t < T; ++t)
      cs.mean[t] += rep.tracked_popularity[tracked_idx][t];
  for (double& m : cs.mean) m /= n;
  for (const RepResult& rep : r.reps)
    for (std::size_t t = 0; t < T; ++t) {
      const double d = rep.tracked_popularity[tracked_idx][t] - cs.mean[t];
      cs.se[t] += d * d;
    }
  for (double& s : cs.se) s = n > 1 ? std::sqrt(s / (n - 1) / n) : 0.0;
  return cs;
}

// Ordinary least squares y = a + b x; returns (a, b).
std::pair<double, double> least_squares(const std::vector<double>& x,
                                        const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {(sy - b * sx) / n, b};
}

std::vector<double> betweenness_diff(const StudyResult& r, std::size_t hi_ty,
                                     std::size_t lo_ty) {
  std::vector<double> d;
  d.reserve(r.reps.size());
  for (const RepResult& rep : r.reps)
    d.push_back(rep.avg_betweenness_by_type[hi_ty] - rep.avg_betweenness_by_type[lo_ty]);
  return d;
}

StudyResult run_variant(const Preset& ps, const std::string& label, unsigned par) {
  for (const PresetVariant& v : ps.variants)
    if (v.label == label) return run_study(v.config, ps.metrics, par);
  throw std::logic_error("preset " + ps.name + " has no variant " + label);
}

// ---------------------------------------------------------------------------
// 1. Identical-weights societies: formation time is a deterministic constant.
Outcome check_deterministic_eft(unsigned par) {
  const auto started = std::chrono::steady_clock::now();
  const SocietyConfig cfg = soc({prof("five-links", 1.0, 1.0, 0.45, 0.3, 0.5),
                                 prof("three-links", 1.0, 1.0, 0.6, 0.7, 0.5)},
                                2000, 20, 9101);
  RunMetricsSpec spec;
  spec.collect_eft = true;
  const StudyResult r = run_study(cfg, spec, par);

  const std::vector<std::uint32_t> lstar = {compute_L_star(cfg.profiles[0]),
                                            compute_L_star(cfg.profiles[1])};
  std::uint64_t checked = 0, wrong = 0, late_unsat = 0;
  for (const RepResult& rep : r.reps)
    for (const EftRecord& e : rep.eft) {
      const std::uint32_t want = lstar[e.type_id] + (e.agent == 1 ? 1 : 0);
      if (e.agent + want - 1 <= cfg.horizon) {
        // cohort that must saturate inside the run
        ++checked;
        if (!e.satisfied) ++late_unsat;
        else if (e.value != want) ++wrong;
      } else if (e.satisfied && e.value != want) {
        ++checked;
        ++wrong;
      }
    }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ostringstream out;
  out << checked << " agents across " << r.reps.size() << " runs: " << wrong
      << " wrong formation times, " << late_unsat
      << " unsaturated despite time (targets 5/3 links; lone first agent +1); " << fd(secs)
      << "s (budget 10s)";
  return {wrong == 0 && late_unsat == 0 && secs < 10.0, out.str()};
}

// ---------------------------------------------------------------------------
// 2. Own-type-only society: mean formation time vs the two-stage closed form.
Outcome check_eeft_closed_form(unsigned par) {
  const auto started = std::chrono::steady_clock::now();
  const SocietyConfig cfg = soc({prof("a", 1.0, 0.0, 0.45, 0.5, 0.5),
                                 prof("b", 1.0, 0.0, 0.45, 0.5, 0.5)},
                                5000, 300, 9202);
  RunMetricsSpec spec;
  spec.collect_eft = true;
  const StudyResult r = run_study(cfg, spec, par);

  const Predicted<double> oracle = eeft_closed_form(cfg.profiles[0]);
  const EftPool pool = pool_eft(r, {0, 1}, 1000, 4900);
  const double mean = pool.samples.empty()
                          ? 0.0
                          : std::accumulate(pool.samples.begin(), pool.samples.end(), 0.0) /
                                static_cast<double>(pool.samples.size());
  const double rel = std::abs(mean - oracle.value) / oracle.value;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ostringstream out;
  out << "mean formation time " << fd(mean) << " vs " << fd(oracle.value)
      << " closed form (rel " << fd(rel * 100) << "% vs 3%), n=" << pool.samples.size()
      << ", censored=" << pool.unsatisfied << "; " << fd(secs) << "s (budget 120s)";
  return {oracle.regime.ok && rel <= 0.03 && secs < 120.0, out.str()};
}

// ---------------------------------------------------------------------------
// 3. Same setup: full distribution vs geometric (+) negative-binomial pmf.
Outcome check_eft_pmf(unsigned par) {
  const SocietyConfig cfg = soc({prof("a", 1.0, 0.0, 0.45, 0.5, 0.5),
                                 prof("b", 1.0, 0.0, 0.45, 0.5, 0.5)},
                                5000, 300, 9202);
  RunMetricsSpec spec;
  spec.collect_eft = true;
  const StudyResult r = run_study(cfg, spec, par);

  constexpr std::uint32_t kMaxT = 400;
  const AnalyticPmf ana = eft_pmf_closed_form(cfg.profiles[0], kMaxT);
  std::vector<double> ana_mass(kMaxT + 1, 0.0);
  for (std::size_t k = 0; k < ana.pmf.support.size(); ++k) {
    const auto v = static_cast<std::uint32_t>(ana.pmf.support[k]);
    if (v <= kMaxT) ana_mass[v] = ana.pmf.mass[k];
  }

  const EftPool pool = pool_eft(r, {0, 1}, 1000, 4900);
  std::vector<double> emp_mass(kMaxT + 1, 0.0);
  double emp_tail = 0.0;
  for (double v : pool.samples) {
    const auto iv = static_cast<std::uint64_t>(v);
    if (iv <= kMaxT) emp_mass[iv] += 1.0;
    else emp_tail += 1.0;
  }
  const double n = static_cast<double>(pool.samples.size());
  for (double& m : emp_mass) m /= n;
  emp_tail /= n;

  double tv = std::abs(emp_tail - ana.tail_mass);
  for (std::uint32_t k = 0; k <= kMaxT; ++k) tv += std::abs(emp_mass[k] - ana_mass[k]);
  tv *= 0.5;

  std::ostringstream out;
  out << "total variation " << fd(tv) << " vs 0.05 ceiling (n=" << pool.samples.size()
      << ", analytic tail " << fd(ana.tail_mass) << ")";
  return {tv < 0.05, out.str()};
}

// ---------------------------------------------------------------------------
// 4. Formation-time CDFs order as predicted in saturation target, population
//    share, and opportunism.
Outcome check_eft_fosd(unsigned par) {
  RunMetricsSpec spec;
  spec.collect_eft = true;

  const StudyResult by_lstar =
      run_study(soc({prof("three-links", 1.0, 0.0, 0.6, 0.5, 0.5),
                     prof("six-links", 1.0, 0.0, 0.4, 0.5, 0.5)},
                    2000, 40, 9404),
                spec, par);
  const StudyResult by_share =
      run_study(soc({prof("minority", 1.0, 0.0, 0.45, 0.5, 0.2),
                     prof("majority", 1.0, 0.0, 0.45, 0.5, 0.8)},
                    2000, 40, 9405),
                spec, par);
  const StudyResult by_gamma =
      run_study(soc({prof("uniform-meeting", 1.0, 0.0, 0.45, 0.0, 0.5),
                     prof("choice-set", 1.0, 0.0, 0.45, 1.0, 0.5)},
                    2000, 40, 9406),
                spec, par);

  const AgentId lo = 200, hi = 1800;
  auto verdict = [&](const StudyResult& r, std::uint32_t slow_type,
                     std::uint32_t fast_type, std::string& note) {
    const EftPool slow = pool_eft(r, {slow_type}, lo, hi);
    const EftPool fast = pool_eft(r, {fast_type}, lo, hi);
    const double tol =
        2.0 / std::sqrt(static_cast<double>(std::min(slow.samples.size(), fast.samples.size())));
    const FosdVerdict v =
        fosd_test(pmf_from_samples(slow.samples), pmf_from_samples(fast.samples), tol);
    note += std::string(to_string(v)) + " (n=" + std::to_string(slow.samples.size()) + "/" +
            std::to_string(fast.samples.size()) + ", tol " + fd(tol) + ")";
    return v == FosdVerdict::a_dominates;  // slower type stochastically larger
  };

  std::string n1 = "six-links over three-links: ", n2 = "minority over majority: ",
              n3 = "uniform-meeting over choice-set: ";
  const bool ok1 = verdict(by_lstar, 1, 0, n1);
  const bool ok2 = verdict(by_share, 0, 1, n2);
  const bool ok3 = verdict(by_gamma, 0, 1, n3);
  return {ok1 && ok2 && ok3, n1 + "; " + n2 + "; " + n3};
}

// ---------------------------------------------------------------------------
// 5. Own-type-only society: permanently split components, average utility at
//    its ceiling; a mixed type drags utility strictly below the ceiling.
Outcome check_structural_holes(unsigned par) {
  RunMetricsSpec spec;
  spec.omega_series = true;
  spec.collect_eft = false;
  spec.checkpoints = {3000};

  const SocietyConfig pure = soc({prof("a", 2.0, 0.0, 0.9, 0.5, 0.5),
                                  prof("b", 2.0, 0.0, 0.9, 0.5, 0.5)},
                                 3000, 20, 9505);
  const StudyResult rp = run_study(pure, spec, par);

  std::uint64_t cross_edges = 0, split_violations = 0;
  for (const RepResult& rep : rp.reps) {
    cross_edges += rep.cross_type_edges;
    for (std::uint32_t t = 50; t <= pure.horizon; ++t)
      if (rep.omega_series[t - 1] < 2) ++split_violations;
  }
  const double ceiling = optimal_bonding_bound(pure).value;
  std::vector<double> u_pure;
  for (const RepResult& rep : rp.reps) u_pure.push_back(rep.checkpoints[0].capital.total_bonding);
  const double mean_pure =
      std::accumulate(u_pure.begin(), u_pure.end(), 0.0) / static_cast<double>(u_pure.size());
  const double rel = std::abs(mean_pure - ceiling) / std::abs(ceiling);

  const SocietyConfig mixed = soc({prof("a", 2.0, 0.0, 0.9, 0.5, 0.5),
                                   prof("b", 2.0, 1.3, 0.9, 0.5, 0.5)},
                                  3000, 20, 9506);
  const StudyResult rm = run_study(mixed, spec, par);
  std::vector<double> u_mixed;
  for (const RepResult& rep : rm.reps)
    u_mixed.push_back(rep.checkpoints[0].capital.total_bonding);
  const double mixed_ceiling = optimal_bonding_bound(mixed).value;
  const BootstrapCi ci = bootstrap_mean_ci(u_mixed, 0.95, kBootstrapSeed);

  std::ostringstream out;
  out << "cross-type edges " << cross_edges << ", splits below 2 components "
      << split_violations << " (t in [50,3000], 20 runs); mean utility " << fd(mean_pure)
      << " vs ceiling " << fd(ceiling) << " (rel " << fd(rel * 100)
      << "% vs 2%); mixed-type society " << fd(ci.mean) << " [" << fd(ci.lo) << ", "
      << fd(ci.hi) << "] vs its ceiling " << fd(mixed_ceiling);
  const bool below = ci.hi < mixed_ceiling;
  return {cross_edges == 0 && split_violations == 0 && rel <= 0.02 && below, out.str()};
}

// ---------------------------------------------------------------------------
// 6. A mixed type glues the blocks into one component; without it the blocks
//    never join.
Outcome check_connectedness(unsigned par) {
  const Preset ps = make_preset("connectivity");
  const StudyResult bridged = run_variant(ps, "bridged", par);
  const StudyResult separate = run_variant(ps, "separate", par);

  auto connected_runs = [](const StudyResult& r) {
    std::uint32_t n = 0;
    for (const RepResult& rep : r.reps) {
      const CheckpointMetrics& last = rep.checkpoints.back();
      if (last.capital.omega == 1 && last.satisfied_component_count == 1) ++n;
    }
    return n;
  };
  const std::uint32_t nb = connected_runs(bridged);
  const std::uint32_t ns = connected_runs(separate);
  const double frac = static_cast<double>(nb) / static_cast<double>(bridged.reps.size());

  std::ostringstream out;
  out << "bridged society single-component in " << nb << "/" << bridged.reps.size()
      << " runs (" << fd(frac * 100) << "% vs 99%); control in " << ns << "/"
      << separate.reps.size() << " (must be 0)";
  return {frac >= 0.99 && ns == 0, out.str()};
}

// ---------------------------------------------------------------------------
// 7. Uniform meetings: an early agent's mean in-degree climbs along
//    L-bar * log(t/(i-1)).
Outcome check_log_growth(unsigned par) {
  const SocietyConfig cfg = soc({prof("plain", 1.0, 1.0, 0.7, 0.0, 1.0)}, 2000, 300, 9707);
  RunMetricsSpec spec;
  spec.collect_eft = false;
  spec.tracked_agents = {10};
  const StudyResult r = run_study(cfg, spec, par);

  const double lbar = mean_gregariousness(cfg);
  const CurveStats cs = curve_stats(r, 0);
  std::vector<double> xs, ys;
  for (std::uint32_t t = 50; t <= cfg.horizon; ++t) {
    xs.push_back(std::log(static_cast<double>(t) / 9.0));
    ys.push_back(cs.mean[t - 1]);
  }
  const auto [a, b] = least_squares(xs, ys);
  const double rel = std::abs(b - lbar) / lbar;

  std::ostringstream out;
  out << "fitted slope " << fd(b) << " (intercept " << fd(a) << ") vs " << fd(lbar)
      << " mean link demand (rel " << fd(rel * 100) << "% vs 10%), agent 10, "
      << r.reps.size() << " runs";
  return {rel <= 0.10, out.str()};
}

// ---------------------------------------------------------------------------
// 8. Choice-set meetings: mean in-degree never drops below the sublinear
//    growth floor (minus sampling noise).
Outcome check_sublinear_bound(unsigned par) {
  const SocietyConfig cfg = soc({prof("plain", 1.0, 1.0, 0.7, 1.0, 1.0)}, 2000, 300, 9808);
  RunMetricsSpec spec;
  spec.collect_eft = false;
  spec.tracked_agents = {10};
  const StudyResult r = run_study(cfg, spec, par);

  const Predicted<double> b = tolerant_growth_exponent(cfg);
  const AgentId i = 10;
  const Curve floor = popularity_sublinear_bound(i, b.value);
  const CurveStats cs = curve_stats(r, 0);

  std::uint32_t violations = 0, first_bad = 0;
  double worst = 0.0;
  for (std::uint32_t t = 2 * i + 1; t <= cfg.horizon; ++t) {
    const double lo = floor.at(t) - 3.0 * cs.se[t - 1];
    const double gap = cs.mean[t - 1] - lo;
    if (gap < 0) {
      ++violations;
      if (!first_bad) first_bad = t;
      worst = std::min(worst, gap);
    }
  }
  std::ostringstream out;
  out << violations << " dates below floor-3se for t in (20, 2000] (exponent "
      << fd(b.value) << ", " << r.reps.size() << " runs)";
  if (violations) out << "; first at t=" << first_bad << ", worst gap " << fd(worst);
  else out << "; margin at t=2000: " << fd(cs.mean.back() - floor.at(cfg.horizon));
  return {violations == 0, out.str()};
}

// ---------------------------------------------------------------------------
// 9. Opportunistic growth overtakes uniform growth no later than the
//    Lambert-W bound, and the bound agrees with a direct bisection solve.
Outcome check_crossover(unsigned par) {
  const AgentId i = 10;
  RunMetricsSpec spec;
  spec.collect_eft = false;
  spec.tracked_agents = {i};

  const SocietyConfig g0 = soc({prof("plain", 1.0, 1.0, 0.7, 0.0, 1.0)}, 2000, 300, 9909);
  SocietyConfig g1 = g0;
  g1.profiles[0].opportunism = 1.0;

  const StudyResult r0 = run_study(g0, spec, par);
  const StudyResult r1 = run_study(g1, spec, par);
  const CurveStats c0 = curve_stats(r0, 0);
  const CurveStats c1 = curve_stats(r1, 0);

  const double lbar = mean_gregariousness(g0);
  const double b = tolerant_growth_exponent(g1).value;
  const Predicted<double> bound = crossover_time_bound(i, lbar, b);
  const double bisect = crossover_time_bisection(i, lbar, b);
  const double bisect_rel = std::abs(bound.value - bisect) / bound.value;

  std::uint32_t last_above = 0;  // last date the uniform curve still leads
  for (std::uint32_t t = i; t <= g0.horizon; ++t)
    if (c0.mean[t - 1] > c1.mean[t - 1]) last_above = t;
  const double crossing = last_above ? last_above + 1 : i;
  const bool crossed = last_above + 1 <= g0.horizon;

  std::ostringstream out;
  out << "empirical crossover t=" << fd(crossing) << " vs bound " << fd(bound.value)
      << " (paired, " << r0.reps.size() << " runs); bound vs bisection rel "
      << fd(bisect_rel) << " vs 1e-6";
  return {crossed && crossing <= bound.value && bisect_rel <= 1e-6 && bound.regime.ok,
          out.str()};
}

// ---------------------------------------------------------------------------
// 10. Fully opportunistic meetings: in-degree increments are stochastically
//     larger for already-popular agents.
Outcome check_pref_attach(unsigned par) {
  const Preset ps = make_preset("prefattach");
  const StudyResult r = run_variant(ps, "gamma1", par);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>> windows = {{500, 1000},
                                                                        {1000, 2000}};
  // Bins need ~800 samples before 2/sqrt(n) can resolve the CDF gap between
  // neighbouring degree classes; at 300 the two tightest pairs read "neither".
  constexpr std::size_t kMinBin = 800;
  const double tol = 2.0 / std::sqrt(static_cast<double>(kMinBin));
  const PaReport report = preferential_attachment_check(r.trajectories, windows, kMinBin, tol);

  std::ostringstream out;
  out << report.ordered_pairs << "/" << report.total_pairs
      << " adjacent degree bins ordered (" << fd(report.ordered_fraction() * 100)
      << "% vs 90%), windows 500-1000 and 1000-2000, bins >= " << kMinBin << " samples";
  return {report.total_pairs > 0 && report.ordered_fraction() >= 0.90, out.str()};
}

// ---------------------------------------------------------------------------
// 11. Higher saturation target -> stochastically larger in-degree; the
//     exponential mean-field law predicts the same ordering.
Outcome check_popularity_fosd(unsigned par) {
  const Preset ps = make_preset("fig6");
  const StudyResult r = run_variant(ps, "L3-vs-L6", par);

  const std::uint32_t horizon = ps.variants.front().config.horizon;
  std::map<std::uint32_t, std::uint64_t> h3, h6;
  for (const RepResult& rep : r.reps)
    for (const CheckpointMetrics& m : rep.checkpoints) {
      if (m.t != horizon) continue;
      for (const auto& [d, c] : m.in_degree_hist_by_type[0]) h3[d] += c;
      for (const auto& [d, c] : m.in_degree_hist_by_type[1]) h6[d] += c;
    }
  const EmpiricalPmf p3 = pmf_from_counts(h3), p6 = pmf_from_counts(h6);
  const double tol = 2.0 / std::sqrt(static_cast<double>(std::min(p3.n, p6.n)));
  const FosdVerdict emp = fosd_test(p6, p3, tol);

  // analytic ordering from the mean-field in-degree law
  const Curve cdf3 = meanfield_popularity_cdf(ps.variants.front().config.profiles[0]);
  const Curve cdf6 = meanfield_popularity_cdf(ps.variants.front().config.profiles[1]);
  auto analytic_pmf = [](const Curve& cdf) {
    EmpiricalPmf pmf;
    double prev = 0.0;
    for (std::uint32_t d = 0; d <= 80; ++d) {
      const double F = cdf.at(d);
      pmf.support.push_back(d);
      pmf.mass.push_back(F - prev);
      prev = F;
    }
    pmf.support.push_back(81);
    pmf.mass.push_back(1.0 - prev);
    pmf.n = 1;
    return pmf;
  };
  const FosdVerdict mf = fosd_test(analytic_pmf(cdf6), analytic_pmf(cdf3), 1e-12);

  std::ostringstream out;
  out << "six-links vs three-links at t=" << horizon << ": empirical " << to_string(emp)
      << " (n=" << p6.n << "/" << p3.n << ", tol " << fd(tol) << "), mean-field "
      << to_string(mf);
  return {emp == FosdVerdict::a_dominates && mf == FosdVerdict::a_dominates &&
              cdf3.regime.ok && cdf6.regime.ok,
          out.str()};
}

// ---------------------------------------------------------------------------
// 12. Betweenness: fast pass equals the brute-force path counter on random
//     graphs, and the textbook closed forms on star/path/complete graphs.
Outcome check_betweenness_exact(unsigned) {
  SocietyConfig dummy;
  dummy.profiles.push_back(prof("only", 1.0, 1.0, 0.5, 0.0, 1.0));
  dummy.horizon = 64;

  Rng rng(777, 0, 0);
  std::uint32_t mismatches = 0;
  double worst = 0.0;
  for (int g = 0; g < 100; ++g) {
    const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.uniform_below(46));
    EvolvingGraph graph(dummy);
    for (std::uint32_t k = 0; k < n; ++k) graph.add_agent(0);
    const std::uint64_t attempts = 4ull * n;
    for (std::uint64_t k = 0; k < attempts; ++k) {
      const AgentId u = 1 + static_cast<AgentId>(rng.uniform_below(n));
      const AgentId v = 1 + static_cast<AgentId>(rng.uniform_below(n));
      if (u == v || graph.has_followee(u, v)) continue;
      graph.add_edge(u, v);
    }
    const std::vector<double> fast = betweenness(graph);
    const std::vector<double> slow = betweenness_reference(graph, graph.t());
    for (std::uint32_t k = 0; k < n; ++k) {
      const double err = std::abs(fast[k] - slow[k]);
      worst = std::max(worst, err);
      if (err > 1e-9 * std::max(1.0, std::abs(slow[k]))) ++mismatches;
    }
  }

  bool analytic_ok = true;
  {  // star: center carries every leaf pair
    EvolvingGraph star(dummy);
    for (int k = 0; k < 30; ++k) star.add_agent(0);
    for (AgentId leaf = 2; leaf <= 30; ++leaf) star.add_edge(leaf, 1);
    const auto b = betweenness(star);
    if (b[0] != 29.0 * 28.0 / 2.0) analytic_ok = false;
    for (std::size_t k = 1; k < b.size(); ++k)
      if (b[k] != 0.0) analytic_ok = false;
  }
  {  // path: interior vertex j (1-based) carries (j-1)(n-j) pairs
    EvolvingGraph path(dummy);
    for (int k = 0; k < 12; ++k) path.add_agent(0);
    for (AgentId v = 1; v < 12; ++v) path.add_edge(v, v + 1);
    const auto b = betweenness(path);
    for (std::uint32_t j = 1; j <= 12; ++j)
      if (b[j - 1] != static_cast<double>((j - 1) * (12 - j))) analytic_ok = false;
  }
  {  // complete: nobody lies between anybody
    EvolvingGraph complete(dummy);
    for (int k = 0; k < 8; ++k) complete.add_agent(0);
    for (AgentId u = 1; u <= 8; ++u)
      for (AgentId v = u + 1; v <= 8; ++v) complete.add_edge(u, v);
    const auto b = betweenness(complete);
    for (double x : b)
      if (x != 0.0) analytic_ok = false;
  }

  std::ostringstream out;
  out << mismatches << " mismatches vs brute force over 100 random graphs (worst abs err "
      << fd(worst) << "); star/path/complete closed forms " << (analytic_ok ? "exact" : "WRONG");
  return {mismatches == 0 && analytic_ok, out.str()};
}

// ---------------------------------------------------------------------------
// 13. Average betweenness falls with the saturation target, falls with
//     opportunism, and favors the majority type.
Outcome check_centrality_statics(unsigned par) {
  auto ci_of = [&](const std::string& preset, std::size_t hi_ty, std::size_t lo_ty) {
    const Preset ps = make_preset(preset);
    const StudyResult r = run_study(ps.variants.front().config, ps.metrics, par);
    return bootstrap_mean_ci(betweenness_diff(r, hi_ty, lo_ty), 0.95, kBootstrapSeed);
  };
  const BootstrapCi by_lstar = ci_of("fig8a", 0, 1);   // three-links minus six-links
  const BootstrapCi by_share = ci_of("fig8b", 0, 1);   // majority minus minority
  const BootstrapCi by_gamma = ci_of("fig8c", 0, 1);   // uniform-meeting minus choice-set

  std::ostringstream out;
  out << "95% CI of average-betweenness gaps: three-minus-six-links [" << fd(by_lstar.lo)
      << ", " << fd(by_lstar.hi) << "]; majority-minus-minority [" << fd(by_share.lo) << ", "
      << fd(by_share.hi) << "]; uniform-minus-choice-set [" << fd(by_gamma.lo) << ", "
      << fd(by_gamma.hi) << "] (all must sit above 0)";
  return {by_lstar.lo > 0 && by_share.lo > 0 && by_gamma.lo > 0, out.str()};
}

// ---------------------------------------------------------------------------
// 14. The mixed minority bridges two closed blocks (and stops bridging when
//     fully opportunistic); a closed minority inside a mixed society becomes
//     the most central hub.
Outcome check_bridging_scenarios(unsigned par) {
  const Preset fig9 = make_preset("fig9");
  const StudyResult g0 = run_variant(fig9, "gamma3-0", par);
  const StudyResult g1 = run_variant(fig9, "gamma3-1", par);

  const BootstrapCi d31 = bootstrap_mean_ci(betweenness_diff(g0, 2, 0), 0.95, kBootstrapSeed);
  const BootstrapCi d32 = bootstrap_mean_ci(betweenness_diff(g0, 2, 1), 0.95, kBootstrapSeed);

  auto margin = [](const StudyResult& r) {
    double m = 0.0;
    for (const RepResult& rep : r.reps)
      m += rep.avg_betweenness_by_type[2] -
           std::max(rep.avg_betweenness_by_type[0], rep.avg_betweenness_by_type[1]);
    return m / static_cast<double>(r.reps.size());
  };
  const double margin0 = margin(g0), margin1 = margin(g1);

  const Preset fig11 = make_preset("fig11");
  const StudyResult hub = run_variant(fig11, "hub", par);
  std::vector<double> hub_margin;
  for (const RepResult& rep : hub.reps)
    hub_margin.push_back(rep.avg_betweenness_by_type[2] -
                         std::max(rep.avg_betweenness_by_type[0],
                                  rep.avg_betweenness_by_type[1]));
  const BootstrapCi hub_ci = bootstrap_mean_ci(hub_margin, 0.95, kBootstrapSeed);

  std::ostringstream out;
  out << "blocks+mixer: mixer lead CIs [" << fd(d31.lo) << ", " << fd(d31.hi) << "] and ["
      << fd(d32.lo) << ", " << fd(d32.hi) << "] above 0; lead " << fd(margin0)
      << " shrinks to " << fd(margin1)
      << " when the mixer turns opportunistic; clique-hub lead CI [" << fd(hub_ci.lo) << ", "
      << fd(hub_ci.hi) << "] above 0";
  return {d31.lo > 0 && d32.lo > 0 && margin1 < margin0 && hub_ci.lo > 0, out.str()};
}

// ---------------------------------------------------------------------------
// 15. Same config and seed -> byte-identical artifacts, for 1 worker, 8
//     workers, and a repeat run.
Outcome check_determinism(unsigned) {
  const SocietyConfig cfg = soc({prof("a", 2.0, 0.0, 0.9, 0.0, 0.5),
                                 prof("b", 2.0, 1.3, 0.9, 0.0, 0.5)},
                                600, 6, 9151);
  RunMetricsSpec spec;
  spec.checkpoints = {150, 300, 600};
  spec.tracked_agents = {5, 10};
  spec.omega_series = true;
  spec.collect_eft = true;
  spec.degree_histograms = true;
  spec.betweenness_at_end = true;

  namespace fs = std::filesystem;
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  const fs::path base = fs::temp_directory_path() / ("netform-verify-" + std::to_string(stamp));

  std::vector<fs::path> dirs;
  for (const auto& [tag, par] :
       std::vector<std::pair<std::string, unsigned>>{{"p1", 1}, {"p8", 8}, {"again", 1}}) {
    const StudyResult r = run_study(cfg, spec, par);
    const fs::path dir = base / tag;
    write_study_artifacts(r, dir);
    dirs.push_back(dir);
  }

  auto listing = [](const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir))
      names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
  };
  const auto names = listing(dirs[0]);
  bool same = true;
  std::string first_diff;
  for (std::size_t d = 1; d < dirs.size() && same; ++d) {
    if (listing(dirs[d]) != names) {
      same = false;
      first_diff = "file sets differ";
      break;
    }
    for (const std::string& name : names)
      if (read_file(dirs[0] / name) != read_file(dirs[d] / name)) {
        same = false;
        first_diff = name + " differs between runs";
        break;
      }
  }
  std::error_code ec;
  fs::remove_all(base, ec);

  std::ostringstream out;
  out << names.size() << " artifacts compared across 1-worker, 8-worker and repeat runs: "
      << (same ? "byte-identical" : first_diff);
  return {same, out.str()};
}

using CheckFn = Outcome (*)(unsigned);

const std::vector<std::pair<std::string, CheckFn>>& table() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"deterministic-eft", check_deterministic_eft},
      {"eeft-closed-form", check_eeft_closed_form},
      {"eft-pmf", check_eft_pmf},
      {"eft-fosd", check_eft_fosd},
      {"structural-holes", check_structural_holes},
      {"connectedness", check_connectedness},
      {"log-growth", check_log_growth},
      {"sublinear-bound", check_sublinear_bound},
      {"crossover", check_crossover},
      {"pref-attach", check_pref_attach},
      {"popularity-fosd", check_popularity_fosd},
      {"betweenness-exact", check_betweenness_exact},
      {"centrality-statics", check_centrality_statics},
      {"bridging-scenarios", check_bridging_scenarios},
      {"determinism", check_determinism},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_verification_name(const std::string& name) {
  for (const auto& [known, fn] : table())
    if (known == name) return true;
  return false;
}

CheckResult run_verification(const std::string& name, unsigned parallelism) {
  for (const auto& [known, fn] : table()) {
    if (known != name) continue;
    const auto started = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = name;
    try {
      const Outcome o = fn(parallelism);
      res.passed = o.passed;
      res.detail = o.detail;
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return res;
  }
  throw std::invalid_argument("unknown verification '" + name + "'");
}

std::vector<CheckResult> run_all_verifications(unsigned parallelism) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : table()) out.push_back(run_verification(name, parallelism));
  return out;
}

}  // namespace netform
