#include "netform/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stack>
#include <stdexcept>

#include "netform/rng.hpp"

namespace netform {

double EmpiricalPmf::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) m += support[i] * mass[i];
  return m;
}

double EmpiricalPmf::total_mass() const {
  return std::accumulate(mass.begin(), mass.end(), 0.0);
}

EmpiricalPmf pmf_from_samples(const std::vector<double>& samples) {
  EmpiricalPmf pmf;
  pmf.n = samples.size();
  if (samples.empty()) return pmf;
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double w = 1.0 / static_cast<double>(sorted.size());
  for (double v : sorted) {
    if (!pmf.support.empty() && pmf.support.back() == v)
      pmf.mass.back() += w;
    else {
      pmf.support.push_back(v);
      pmf.mass.push_back(w);
    }
  }
  return pmf;
}

EmpiricalPmf pmf_from_counts(const std::map<std::uint32_t, std::uint64_t>& counts) {
  EmpiricalPmf pmf;
  std::uint64_t total = 0;
  for (const auto& [_, c] : counts) total += c;
  pmf.n = total;
  if (!total) return pmf;
  for (const auto& [v, c] : counts) {
    pmf.support.push_back(static_cast<double>(v));
    pmf.mass.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return pmf;
}

EftSample eft_samples(const Trajectory& traj, std::uint32_t type_id,
                      AgentId cohort_lo, AgentId cohort_hi) {
  if (cohort_lo < 1 || cohort_hi < cohort_lo)
    throw std::invalid_argument("eft_samples: bad cohort range");
  EftSample out;
  const EvolvingGraph& g = traj.graph;
  const AgentId hi = std::min<AgentId>(cohort_hi, g.t());
  for (AgentId i = cohort_lo; i <= hi; ++i) {
    const AgentState& a = g.agent(i);
    if (a.type_id != type_id) continue;
    if (a.satisfied)
      out.values.push_back(*a.eft);
    else
      ++out.unsatisfied;
  }
  return out;
}

std::optional<EmpiricalPmf> eft_empirical_pmf(const Trajectory& traj,
                                              std::uint32_t type_id,
                                              AgentId cohort_lo, AgentId cohort_hi) {
  const EftSample s = eft_samples(traj, type_id, cohort_lo, cohort_hi);
  if (s.values.empty()) return std::nullopt;
  std::vector<double> vals(s.values.begin(), s.values.end());
  return pmf_from_samples(vals);
}

CapitalReport bonding_capital(const EvolvingGraph& g, std::uint32_t at_t) {
  const SocietyConfig& cfg = g.config();
  CapitalReport rep;
  rep.per_type_bonding.assign(cfg.profiles.size(), 0.0);
  rep.per_type_count.assign(cfg.profiles.size(), 0);
  const std::uint32_t n = std::min(g.t(), at_t);
  double total = 0.0;
  for (AgentId i = 1; i <= n; ++i) {
    const AgentState& a = g.agent(i);
    const auto [same, diff] = g.counts_at(i, at_t);
    const double u = agent_utility(cfg.profiles[a.type_id], same, diff);
    rep.per_type_bonding[a.type_id] += u;
    ++rep.per_type_count[a.type_id];
    total += u;
  }
  for (std::size_t k = 0; k < rep.per_type_bonding.size(); ++k)
    if (rep.per_type_count[k]) rep.per_type_bonding[k] /= rep.per_type_count[k];
  rep.total_bonding = n ? total / n : 0.0;
  rep.omega = g.components_undirected(at_t).non_singleton_count;
  return rep;
}

std::vector<std::uint32_t> popularity_series(const Trajectory& traj, AgentId agent) {
  const EvolvingGraph& g = traj.graph;
  if (agent < 1 || agent > g.t())
    throw std::out_of_range("popularity_series: unknown agent");
  // Difference array over formation dates, then prefix-sum.
  std::vector<std::uint32_t> series(traj.config.horizon, 0);
  for (const Link& l : g.followers(agent)) {
    if (l.t <= traj.config.horizon) ++series[l.t - 1];
  }
  for (std::size_t t = 1; t < series.size(); ++t) series[t] += series[t - 1];
  return series;
}

std::optional<EmpiricalPmf> popularity_distribution(const EvolvingGraph& g,
                                                    std::uint32_t type_id,
                                                    std::uint32_t at_t) {
  const std::uint32_t n = std::min(g.t(), at_t);
  std::map<std::uint32_t, std::uint64_t> hist;
  for (AgentId i = 1; i <= n; ++i) {
    if (g.agent(i).type_id != type_id) continue;
    ++hist[g.deg_in_at(i, at_t)];
  }
  if (hist.empty()) return std::nullopt;
  return pmf_from_counts(hist);
}

namespace {

// Undirected simple adjacency restricted to edges formed by at_t.
std::vector<std::vector<std::uint32_t>> simplified_adjacency(
    const EvolvingGraph& g, std::uint32_t at_t, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (AgentId i = 1; i <= n; ++i) {
    for (const Link& l : g.agent(i).followees) {
      if (l.t > at_t || l.peer > n) continue;
      adj[i - 1].push_back(l.peer - 1);
      adj[l.peer - 1].push_back(i - 1);
    }
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

}  // namespace

std::vector<double> betweenness(const EvolvingGraph& g, std::uint32_t at_t) {
  const std::uint32_t n = std::min(g.t(), at_t);
  const auto adj = simplified_adjacency(g, at_t, n);
  std::vector<double> score(n, 0.0);

  // Brandes' accumulation, one BFS per source (unweighted graph).
  std::vector<std::int32_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<std::vector<std::uint32_t>> preds(n);

  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<std::uint32_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::uint32_t v = q.front();
      q.pop();
      order.push_back(v);
      for (std::uint32_t w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::uint32_t w = *it;
      for (std::uint32_t v : preds[w])
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) score[w] += delta[w];
    }
  }
  // Each unordered pair was accumulated from both endpoints.
  for (double& x : score) x *= 0.5;
  return score;
}

std::vector<double> betweenness_reference(const EvolvingGraph& g, std::uint32_t at_t) {
  const std::uint32_t n = std::min(g.t(), at_t);
  const auto adj = simplified_adjacency(g, at_t, n);
  constexpr std::int32_t kInf = INT32_MAX / 4;

  // All-pairs BFS distances plus shortest-path counts.
  std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, kInf));
  std::vector<std::vector<double>> cnt(n, std::vector<double>(n, 0.0));
  for (std::uint32_t s = 0; s < n; ++s) {
    d[s][s] = 0;
    cnt[s][s] = 1.0;
    std::queue<std::uint32_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::uint32_t v = q.front();
      q.pop();
      for (std::uint32_t w : adj[v]) {
        if (d[s][w] == kInf) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
        if (d[s][w] == d[s][v] + 1) cnt[s][w] += cnt[s][v];
      }
    }
  }

  // A vertex i lies on a shortest k-j path iff d(k,i)+d(i,j) = d(k,j); the
  // number of such paths through i factorizes as cnt(k,i)*cnt(i,j).
  std::vector<double> score(n, 0.0);
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t j = k + 1; j < n; ++j) {
      if (d[k][j] >= kInf) continue;  // disconnected pairs contribute nothing
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i == k || i == j) continue;
        if (d[k][i] + d[i][j] == d[k][j])
          score[i] += cnt[k][i] * cnt[i][j] / cnt[k][j];
      }
    }
  }
  return score;
}

std::vector<double> avg_betweenness_by_type(const EvolvingGraph& g,
                                            std::uint32_t at_t,
                                            const std::vector<double>& scores) {
  const std::uint32_t n = std::min<std::uint32_t>(
      std::min(g.t(), at_t), static_cast<std::uint32_t>(scores.size()));
  std::vector<double> sums(g.config().profiles.size(), 0.0);
  std::vector<std::uint32_t> counts(sums.size(), 0);
  for (AgentId i = 1; i <= n; ++i) {
    sums[g.agent(i).type_id] += scores[i - 1];
    ++counts[g.agent(i).type_id];
  }
  for (std::size_t k = 0; k < sums.size(); ++k)
    if (counts[k]) sums[k] /= counts[k];
  return sums;
}

FosdVerdict fosd_test(const EmpiricalPmf& a, const EmpiricalPmf& b, double tol) {
  if (a.support.empty() || b.support.empty())
    throw std::invalid_argument("fosd_test: empty pmf");

  // Walk the joint support accumulating both CDFs.
  auto dominates = [tol](const EmpiricalPmf& x, const EmpiricalPmf& y) {
    std::size_t ix = 0, iy = 0;
    double Fx = 0.0, Fy = 0.0;
    bool strict = false;
    while (ix < x.support.size() || iy < y.support.size()) {
      double point;
      if (ix < x.support.size() &&
          (iy >= y.support.size() || x.support[ix] <= y.support[iy]))
        point = x.support[ix];
      else
        point = y.support[iy];
      while (ix < x.support.size() && x.support[ix] <= point) Fx += x.mass[ix++];
      while (iy < y.support.size() && y.support[iy] <= point) Fy += y.mass[iy++];
      if (Fx > Fy + tol) return false;
      if (Fx < Fy - tol) strict = true;
    }
    return strict;
  };

  if (dominates(a, b)) return FosdVerdict::a_dominates;
  if (dominates(b, a)) return FosdVerdict::b_dominates;
  return FosdVerdict::neither;
}

const char* to_string(FosdVerdict v) {
  switch (v) {
    case FosdVerdict::a_dominates: return "a_dominates";
    case FosdVerdict::b_dominates: return "b_dominates";
    default: return "neither";
  }
}

PaReport preferential_attachment_check(
    const std::vector<Trajectory>& trajs,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& windows,
    std::size_t min_bin_samples, double tol) {
  PaReport report;
  for (const auto& [t0, t1] : windows) {
    if (t1 <= t0) throw std::invalid_argument("pa check: window end before start");
    // Pool increment samples per starting degree across replications.
    std::map<std::uint32_t, std::vector<double>> by_degree;
    for (const Trajectory& traj : trajs) {
      const EvolvingGraph& g = traj.graph;
      const AgentId alive = std::min<AgentId>(g.t(), t0);
      for (AgentId i = 1; i <= alive; ++i) {
        const std::uint32_t d0 = g.deg_in_at(i, t0);
        const std::uint32_t d1 = g.deg_in_at(i, t1);
        by_degree[d0].push_back(static_cast<double>(d1 - d0));
      }
    }

    PaCheckpointReport cp;
    cp.t_start = t0;
    cp.t_end = t1;
    // Merge ascending degree groups until each bin is well-populated.
    std::vector<double> pending;
    std::uint32_t lo = 0;
    bool open = false;
    for (auto& [deg, vals] : by_degree) {
      if (!open) {
        lo = deg;
        open = true;
      }
      pending.insert(pending.end(), vals.begin(), vals.end());
      if (pending.size() >= min_bin_samples) {
        cp.bins.push_back({lo, deg, pmf_from_samples(pending)});
        pending.clear();
        open = false;
      }
    }
    if (open && !pending.empty()) {
      // Tail too sparse to stand alone: fold into the last bin.
      if (!cp.bins.empty()) {
        ++cp.merged_bins;
        PaBin& last = cp.bins.back();
        std::vector<double> merged;
        for (std::size_t i = 0; i < last.increments.support.size(); ++i) {
          const auto copies = static_cast<std::size_t>(std::llround(
              last.increments.mass[i] * static_cast<double>(last.increments.n)));
          merged.insert(merged.end(), copies, last.increments.support[i]);
        }
        merged.insert(merged.end(), pending.begin(), pending.end());
        last.deg_hi = by_degree.rbegin()->first;
        last.increments = pmf_from_samples(merged);
      } else {
        cp.bins.push_back({lo, by_degree.rbegin()->first, pmf_from_samples(pending)});
      }
    }

    for (std::size_t i = 0; i + 1 < cp.bins.size(); ++i) {
      const FosdVerdict v =
          fosd_test(cp.bins[i + 1].increments, cp.bins[i].increments, tol);
      cp.adjacent.push_back(v);
      ++report.total_pairs;
      if (v == FosdVerdict::a_dominates) ++report.ordered_pairs;
    }
    report.checkpoints.push_back(std::move(cp));
  }
  return report;
}

BootstrapCi bootstrap_mean_ci(const std::vector<double>& values, double level,
                              std::uint64_t seed, int resamples) {
  if (values.empty()) throw std::invalid_argument("bootstrap: no values");
  BootstrapCi ci;
  ci.mean = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  Rng rng(seed, 0xB007, 0);
  std::vector<double> means;
  means.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      acc += values[rng.uniform_below(values.size())];
    means.push_back(acc / values.size());
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - level) / 2.0;
  const auto idx = [&](double q) {
    const double pos = q * (means.size() - 1);
    return means[static_cast<std::size_t>(std::llround(pos))];
  };
  ci.lo = idx(alpha);
  ci.hi = idx(1.0 - alpha);
  return ci;
}

}  // namespace netform
