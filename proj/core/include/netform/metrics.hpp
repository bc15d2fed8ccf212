// Measures on trajectories: ego-formation-time statistics, bonding utility,
// popularity (in-degree) series and distributions, betweenness on the
// undirected simplification, and first-order stochastic dominance tests.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/graph.hpp"

namespace netform {

struct EmpiricalPmf {
  std::vector<double> support;  // strictly increasing
  std::vector<double> mass;     // sums to 1 (within 1e-9)
  std::size_t n = 0;            // sample count behind the estimate

  double mean() const;
  double total_mass() const;
};

EmpiricalPmf pmf_from_samples(const std::vector<double>& samples);
EmpiricalPmf pmf_from_counts(const std::map<std::uint32_t, std::uint64_t>& counts);

struct CapitalReport {
  std::vector<double> per_type_bonding;       // U_k
  std::vector<std::uint32_t> per_type_count;  // |V_k|
  double total_bonding = 0.0;                 // U = population mean utility
  std::uint32_t omega = 0;                    // non-singleton component count
};

struct EftSample {
  std::vector<std::uint32_t> values;  // satisfied agents' formation times
  std::size_t unsatisfied = 0;        // cohort members never saturated
};

// Formation times of satisfied agents of one type born in [cohort_lo,
// cohort_hi]. Unsatisfied cohort members are counted, not mixed in.
EftSample eft_samples(const Trajectory& traj, std::uint32_t type_id,
                      AgentId cohort_lo, AgentId cohort_hi);

// Empty-cohort / all-unsatisfied signal: nullopt.
std::optional<EmpiricalPmf> eft_empirical_pmf(const Trajectory& traj,
                                              std::uint32_t type_id,
                                              AgentId cohort_lo, AgentId cohort_hi);

// Average utility per type and overall at date at_t (components included so
// callers can read the segregation state alongside).
CapitalReport bonding_capital(const EvolvingGraph& g, std::uint32_t at_t);
inline CapitalReport bonding_capital(const EvolvingGraph& g) {
  return bonding_capital(g, g.t());
}

// In-degree of one agent for every t in [1, horizon]; zero before birth.
std::vector<std::uint32_t> popularity_series(const Trajectory& traj, AgentId agent);

// Normalized in-degree histogram over type-k agents alive at at_t; nullopt
// when the type has no agents yet.
std::optional<EmpiricalPmf> popularity_distribution(const EvolvingGraph& g,
                                                    std::uint32_t type_id,
                                                    std::uint32_t at_t);

// Betweenness on the undirected simplification (directions dropped, parallel
// edges merged), unordered pairs, disconnected pairs contribute zero.
std::vector<double> betweenness(const EvolvingGraph& g, std::uint32_t at_t);
inline std::vector<double> betweenness(const EvolvingGraph& g) {
  return betweenness(g, g.t());
}

// Independent checker: all-pairs shortest-path counting over the same
// simplification (O(n^3 + n^2 m); for small graphs and verification only).
std::vector<double> betweenness_reference(const EvolvingGraph& g, std::uint32_t at_t);

std::vector<double> avg_betweenness_by_type(const EvolvingGraph& g,
                                            std::uint32_t at_t,
                                            const std::vector<double>& scores);

enum class FosdVerdict : std::uint8_t { a_dominates, b_dominates, neither };

// a dominates (is stochastically larger) iff CDF_a <= CDF_b + tol on the
// joint support and falls below by more than tol somewhere.
FosdVerdict fosd_test(const EmpiricalPmf& a, const EmpiricalPmf& b, double tol);

const char* to_string(FosdVerdict v);

// Preferential-attachment probe: agents binned by in-degree at a checkpoint;
// the in-degree increments over the following window should be FOSD-ordered
// by bin when attachment favors the already-popular.
struct PaBin {
  std::uint32_t deg_lo = 0, deg_hi = 0;  // inclusive degree range
  EmpiricalPmf increments;
};
struct PaCheckpointReport {
  std::uint32_t t_start = 0, t_end = 0;
  std::vector<PaBin> bins;                 // ascending degree
  std::vector<FosdVerdict> adjacent;       // verdict for (bin i+1 vs bin i)
  std::size_t merged_bins = 0;             // sparse bins folded into neighbors
};
struct PaReport {
  std::vector<PaCheckpointReport> checkpoints;
  std::size_t ordered_pairs = 0;  // adjacent pairs where the higher bin dominates
  std::size_t total_pairs = 0;
  double ordered_fraction() const {
    return total_pairs ? static_cast<double>(ordered_pairs) / total_pairs : 0.0;
  }
};

PaReport preferential_attachment_check(const std::vector<Trajectory>& trajs,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& windows,
                                       std::size_t min_bin_samples, double tol);

// Percentile bootstrap CI for the mean of per-replication statistics.
struct BootstrapCi {
  double mean = 0.0, lo = 0.0, hi = 0.0;
};
BootstrapCi bootstrap_mean_ci(const std::vector<double>& values, double level,
                              std::uint64_t seed, int resamples = 2000);

}  // namespace netform
