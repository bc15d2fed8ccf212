// Replicated studies: run the same society across seed streams, in parallel,
// and reduce each run to the metrics a study actually asks for. Results are
// keyed by replication index, so the outcome is identical for any worker
// count.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/metrics.hpp"

namespace netform {

// What to measure during a study. Checkpoints are graph dates (clamped to the
// horizon; empty means "horizon only").
struct RunMetricsSpec {
  std::vector<std::uint32_t> checkpoints;
  std::vector<AgentId> tracked_agents;  // full in-degree series per agent
  bool omega_series = false;            // component count at every date
  bool collect_eft = true;              // one record per agent
  bool betweenness_at_end = false;
  bool degree_histograms = false;       // per-type in-degree histogram per checkpoint
  bool keep_trajectories = false;       // retain full graphs (memory!)
};

struct CheckpointMetrics {
  std::uint32_t t = 0;
  CapitalReport capital;
  std::uint32_t largest_component = 0;
  std::uint32_t satisfied_component_count = 0;  // distinct components holding
                                                // agents already saturated at t
  std::vector<double> mean_in_degree_by_type;
  std::vector<std::map<std::uint32_t, std::uint64_t>> in_degree_hist_by_type;
};

struct EftRecord {
  AgentId agent = 0;
  std::uint32_t type_id = 0;
  std::uint32_t value = 0;   // meaningful when satisfied
  bool satisfied = false;
};

struct RepResult {
  std::uint64_t stream_id = 0;
  std::vector<CheckpointMetrics> checkpoints;
  std::vector<std::vector<std::uint32_t>> tracked_popularity;  // [tracked idx][t-1]
  std::vector<EftRecord> eft;
  std::vector<std::uint32_t> omega_series;  // [t-1], when requested
  std::vector<double> avg_betweenness_by_type;
  std::uint64_t edges = 0;
  std::uint64_t cross_type_edges = 0;
};

struct StudyResult {
  SocietyConfig config;
  RunMetricsSpec spec;
  std::vector<RepResult> reps;
  std::vector<Trajectory> trajectories;  // iff spec.keep_trajectories
};

// Runs config.replications streams. parallelism 0 picks the hardware count.
StudyResult run_study(const SocietyConfig& config, const RunMetricsSpec& spec,
                      unsigned parallelism = 0);

// Reduce one finished trajectory (exposed for tests and one-off runs).
RepResult reduce_trajectory(const Trajectory& traj, const RunMetricsSpec& spec);

// Component count at every date 1..horizon via one incremental sweep.
std::vector<std::uint32_t> omega_over_time(const EvolvingGraph& g);

// Machine-readable study digest: config echo, derived quantities, per-rep and
// cross-rep aggregates. Deterministic for a given result.
std::string study_summary_json(const StudyResult& result);

// summary.json plus CSV tables and SVG charts under dir.
void write_study_artifacts(const StudyResult& result, const std::filesystem::path& dir);

}  // namespace netform
