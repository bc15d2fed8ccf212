#include "netform/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "netform/config.hpp"
#include "netform/io.hpp"

namespace netform {

namespace {

std::vector<std::uint32_t> effective_checkpoints(const RunMetricsSpec& spec,
                                                 std::uint32_t horizon) {
  std::vector<std::uint32_t> cps = spec.checkpoints;
  if (cps.empty()) cps.push_back(horizon);
  for (auto& c : cps) c = std::min(std::max(c, 1u), horizon);
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  return cps;
}

struct DsuOmega {
  std::vector<std::uint32_t> parent, size;
  std::uint32_t non_singleton = 0;

  explicit DsuOmega(std::uint32_t n) : parent(n + 1), size(n + 1, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    const bool a1 = size[a] == 1, b1 = size[b] == 1;
    if (a1 && b1) ++non_singleton;
    else if (!a1 && !b1) --non_singleton;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

std::vector<std::uint32_t> omega_over_time(const EvolvingGraph& g) {
  struct E {
    std::uint32_t t;
    AgentId from, to;
  };
  std::vector<E> edges;
  edges.reserve(g.edge_count());
  for (AgentId id = 1; id <= g.t(); ++id)
    for (const Link& l : g.agent(id).followees) edges.push_back({l.t, id, l.peer});
  std::sort(edges.begin(), edges.end(),
            [](const E& a, const E& b) { return a.t < b.t; });

  std::vector<std::uint32_t> series(g.t(), 0);
  DsuOmega dsu(g.t());
  std::size_t k = 0;
  for (std::uint32_t t = 1; t <= g.t(); ++t) {
    while (k < edges.size() && edges[k].t == t) {
      dsu.unite(edges[k].from, edges[k].to);
      ++k;
    }
    series[t - 1] = dsu.non_singleton;
  }
  return series;
}

RepResult reduce_trajectory(const Trajectory& traj, const RunMetricsSpec& spec) {
  const EvolvingGraph& g = traj.graph;
  const std::size_t n_types = traj.config.profiles.size();
  RepResult rep;
  rep.stream_id = traj.stream_id;
  rep.edges = g.edge_count();

  for (AgentId id = 1; id <= g.t(); ++id) {
    const AgentState& a = g.agent(id);
    for (const Link& l : a.followees)
      if (g.agent(l.peer).type_id != a.type_id) ++rep.cross_type_edges;
  }

  for (std::uint32_t cp : effective_checkpoints(spec, traj.config.horizon)) {
    CheckpointMetrics m;
    m.t = cp;
    m.capital = bonding_capital(g, cp);
    const ComponentsResult comps = g.components_undirected(cp);
    m.largest_component = comps.component_size.empty()
                              ? 0
                              : *std::max_element(comps.component_size.begin(),
                                                  comps.component_size.end());
    {
      std::vector<std::uint32_t> sat_labels;
      for (AgentId id = 1; id <= cp; ++id) {
        const AgentState& a = g.agent(id);
        // saturated at cp iff the recorded formation time has already elapsed
        if (a.satisfied && a.eft && id + *a.eft - 1 <= cp)
          sat_labels.push_back(comps.labels[id - 1]);
      }
      std::sort(sat_labels.begin(), sat_labels.end());
      sat_labels.erase(std::unique(sat_labels.begin(), sat_labels.end()), sat_labels.end());
      m.satisfied_component_count = static_cast<std::uint32_t>(sat_labels.size());
    }
    m.mean_in_degree_by_type.assign(n_types, 0.0);
    std::vector<std::uint64_t> count(n_types, 0);
    if (spec.degree_histograms) m.in_degree_hist_by_type.resize(n_types);
    for (AgentId id = 1; id <= cp; ++id) {
      const std::uint32_t ty = g.agent(id).type_id;
      const std::uint32_t d = g.deg_in_at(id, cp);
      m.mean_in_degree_by_type[ty] += d;
      ++count[ty];
      if (spec.degree_histograms) ++m.in_degree_hist_by_type[ty][d];
    }
    for (std::size_t ty = 0; ty < n_types; ++ty)
      if (count[ty]) m.mean_in_degree_by_type[ty] /= static_cast<double>(count[ty]);
    rep.checkpoints.push_back(std::move(m));
  }

  for (AgentId a : spec.tracked_agents) {
    if (a < 1 || a > g.t()) {
      rep.tracked_popularity.emplace_back();
      continue;
    }
    rep.tracked_popularity.push_back(popularity_series(traj, a));
  }

  if (spec.collect_eft) {
    rep.eft.reserve(g.t());
    for (AgentId id = 1; id <= g.t(); ++id) {
      const AgentState& a = g.agent(id);
      rep.eft.push_back(
          {id, a.type_id, a.satisfied && a.eft ? *a.eft : 0u, a.satisfied});
    }
  }

  if (spec.omega_series) rep.omega_series = omega_over_time(g);
  if (spec.betweenness_at_end)
    rep.avg_betweenness_by_type = avg_betweenness_by_type(g, g.t(), betweenness(g));
  return rep;
}

StudyResult run_study(const SocietyConfig& config, const RunMetricsSpec& spec,
                      unsigned parallelism) {
  StudyResult out;
  out.config = config;
  out.spec = spec;
  const std::uint32_t reps = std::max(config.replications, 1u);
  out.reps.resize(reps);
  if (spec.keep_trajectories)
    out.trajectories.resize(reps, Trajectory{config, EvolvingGraph(config), {}, 0});

  unsigned workers = parallelism ? parallelism : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min(workers, reps));

  std::atomic<std::uint32_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto work = [&] {
    for (;;) {
      const std::uint32_t k = next.fetch_add(1);
      if (k >= reps) return;
      try {
        Trajectory traj = simulate(config, k);
        out.reps[k] = reduce_trajectory(traj, spec);
        if (spec.keep_trajectories) out.trajectories[k] = std::move(traj);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

namespace {

using nlohmann::json;

json checkpoint_aggregate(const StudyResult& r) {
  json out = json::array();
  if (r.reps.empty()) return out;
  const std::size_t n_cp = r.reps.front().checkpoints.size();
  const std::size_t n_types = r.config.profiles.size();
  for (std::size_t c = 0; c < n_cp; ++c) {
    double bonding = 0.0, omega = 0.0, largest = 0.0;
    std::vector<double> in_deg(n_types, 0.0), type_bonding(n_types, 0.0);
    for (const RepResult& rep : r.reps) {
      const CheckpointMetrics& m = rep.checkpoints[c];
      bonding += m.capital.total_bonding;
      omega += m.capital.omega;
      largest += m.largest_component;
      for (std::size_t ty = 0; ty < n_types; ++ty) {
        in_deg[ty] += m.mean_in_degree_by_type[ty];
        type_bonding[ty] += m.capital.per_type_bonding[ty];
      }
    }
    const double n = static_cast<double>(r.reps.size());
    json cp;
    cp["t"] = r.reps.front().checkpoints[c].t;
    cp["mean_bonding"] = bonding / n;
    cp["mean_omega"] = omega / n;
    cp["mean_largest_component"] = largest / n;
    json per_type = json::array();
    for (std::size_t ty = 0; ty < n_types; ++ty) {
      json jt;
      jt["type"] = r.config.profiles[ty].name;
      jt["mean_in_degree"] = in_deg[ty] / n;
      jt["mean_bonding"] = type_bonding[ty] / n;
      per_type.push_back(std::move(jt));
    }
    cp["per_type"] = std::move(per_type);
    out.push_back(std::move(cp));
  }
  return out;
}

json eft_aggregate(const StudyResult& r) {
  const std::size_t n_types = r.config.profiles.size();
  std::vector<double> sum(n_types, 0.0);
  std::vector<std::uint64_t> n_sat(n_types, 0), n_unsat(n_types, 0);
  for (const RepResult& rep : r.reps)
    for (const EftRecord& e : rep.eft) {
      if (e.satisfied) {
        sum[e.type_id] += e.value;
        ++n_sat[e.type_id];
      } else {
        ++n_unsat[e.type_id];
      }
    }
  json out = json::array();
  for (std::size_t ty = 0; ty < n_types; ++ty) {
    json jt;
    jt["type"] = r.config.profiles[ty].name;
    jt["satisfied"] = n_sat[ty];
    jt["unsatisfied"] = n_unsat[ty];
    if (n_sat[ty]) jt["mean_eft"] = sum[ty] / static_cast<double>(n_sat[ty]);
    else jt["mean_eft"] = nullptr;
    out.push_back(std::move(jt));
  }
  return out;
}

}  // namespace

std::string study_summary_json(const StudyResult& result) {
  json root;
  root["config"] = json::parse(config_to_json(result.config));
  root["derived"] = json::parse(derived_quantities_json(derive_quantities(result.config)));
  root["replications"] = result.reps.size();

  double edges = 0.0, cross = 0.0;
  for (const RepResult& rep : result.reps) {
    edges += rep.edges;
    cross += rep.cross_type_edges;
  }
  const double n = result.reps.empty() ? 1.0 : static_cast<double>(result.reps.size());
  root["mean_edges"] = edges / n;
  root["mean_cross_type_edges"] = cross / n;
  root["checkpoints"] = checkpoint_aggregate(result);
  root["eft"] = eft_aggregate(result);

  if (!result.reps.empty() && !result.reps.front().avg_betweenness_by_type.empty()) {
    const std::size_t n_types = result.config.profiles.size();
    std::vector<double> bt(n_types, 0.0);
    for (const RepResult& rep : result.reps)
      for (std::size_t ty = 0; ty < n_types; ++ty)
        bt[ty] += rep.avg_betweenness_by_type[ty];
    json jb = json::array();
    for (std::size_t ty = 0; ty < n_types; ++ty) {
      json jt;
      jt["type"] = result.config.profiles[ty].name;
      jt["mean_avg_betweenness"] = bt[ty] / n;
      jb.push_back(std::move(jt));
    }
    root["betweenness"] = std::move(jb);
  }
  return root.dump(2);
}

namespace {

std::string u32(std::uint32_t v) { return std::to_string(v); }
std::string u64(std::uint64_t v) { return std::to_string(v); }

void write_checkpoints_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < r.reps.size(); ++k)
    for (const CheckpointMetrics& m : r.reps[k].checkpoints)
      for (std::size_t ty = 0; ty < r.config.profiles.size(); ++ty)
        rows.push_back({u64(k), u32(m.t), r.config.profiles[ty].name,
                        format_double(m.mean_in_degree_by_type[ty]),
                        format_double(m.capital.per_type_bonding[ty]),
                        format_double(m.capital.total_bonding), u32(m.capital.omega),
                        u32(m.largest_component)});
  std::ostringstream out;
  write_csv(out,
            {"rep", "t", "type", "mean_in_degree", "type_bonding", "total_bonding", "omega",
             "largest_component"},
            rows);
  write_file(dir / "checkpoints.csv", out.str());
}

void write_eft_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::ostringstream out;
  out << "rep,agent,type,eft,satisfied\n";
  for (std::size_t k = 0; k < r.reps.size(); ++k)
    for (const EftRecord& e : r.reps[k].eft)
      out << k << ',' << e.agent << ',' << r.config.profiles[e.type_id].name << ','
          << e.value << ',' << (e.satisfied ? 1 : 0) << '\n';
  write_file(dir / "eft.csv", out.str());
}

void write_omega_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::ostringstream out;
  out << "rep,t,omega\n";
  for (std::size_t k = 0; k < r.reps.size(); ++k) {
    const auto& series = r.reps[k].omega_series;
    for (std::size_t t = 0; t < series.size(); ++t)
      out << k << ',' << (t + 1) << ',' << series[t] << '\n';
  }
  write_file(dir / "omega.csv", out.str());
}

void write_popularity_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::ostringstream out;
  out << "rep,agent,t,in_degree\n";
  for (std::size_t k = 0; k < r.reps.size(); ++k)
    for (std::size_t a = 0; a < r.spec.tracked_agents.size(); ++a) {
      const auto& series = r.reps[k].tracked_popularity[a];
      for (std::size_t t = 0; t < series.size(); ++t)
        out << k << ',' << r.spec.tracked_agents[a] << ',' << (t + 1) << ',' << series[t]
            << '\n';
    }
  write_file(dir / "popularity.csv", out.str());
}

void write_degree_hist_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::ostringstream out;
  out << "rep,t,type,in_degree,count\n";
  for (std::size_t k = 0; k < r.reps.size(); ++k)
    for (const CheckpointMetrics& m : r.reps[k].checkpoints)
      for (std::size_t ty = 0; ty < m.in_degree_hist_by_type.size(); ++ty)
        for (const auto& [deg, cnt] : m.in_degree_hist_by_type[ty])
          out << k << ',' << m.t << ',' << r.config.profiles[ty].name << ',' << deg << ','
              << cnt << '\n';
  write_file(dir / "degree_hist.csv", out.str());
}

void write_betweenness_csv(const StudyResult& r, const std::filesystem::path& dir) {
  std::ostringstream out;
  out << "rep,type,avg_betweenness\n";
  for (std::size_t k = 0; k < r.reps.size(); ++k)
    for (std::size_t ty = 0; ty < r.reps[k].avg_betweenness_by_type.size(); ++ty)
      out << k << ',' << r.config.profiles[ty].name << ','
          << format_double(r.reps[k].avg_betweenness_by_type[ty]) << '\n';
  write_file(dir / "betweenness.csv", out.str());
}

void write_charts(const StudyResult& r, const std::filesystem::path& dir) {
  const std::size_t n_reps = r.reps.size();
  if (n_reps == 0 || r.reps.front().checkpoints.empty()) return;

  {  // mean bonding capital across reps, one point per checkpoint
    SvgSeries s;
    s.label = "mean bonding";
    for (std::size_t c = 0; c < r.reps.front().checkpoints.size(); ++c) {
      double sum = 0.0;
      for (const RepResult& rep : r.reps) sum += rep.checkpoints[c].capital.total_bonding;
      s.points.emplace_back(r.reps.front().checkpoints[c].t, sum / double(n_reps));
    }
    SvgOptions opt;
    opt.title = "bonding capital";
    opt.x_label = "t";
    opt.y_label = "mean utility";
    write_file(dir / "capital.svg", svg_line_chart({s}, opt));
  }

  if (!r.spec.tracked_agents.empty()) {
    std::vector<SvgSeries> series;
    for (std::size_t a = 0; a < r.spec.tracked_agents.size(); ++a) {
      SvgSeries s;
      s.label = "agent " + std::to_string(r.spec.tracked_agents[a]);
      const std::size_t len = r.reps.front().tracked_popularity[a].size();
      for (std::size_t t = 0; t < len; t += std::max<std::size_t>(1, len / 400)) {
        double sum = 0.0;
        for (const RepResult& rep : r.reps) sum += rep.tracked_popularity[a][t];
        s.points.emplace_back(t + 1, sum / double(n_reps));
      }
      if (!s.points.empty()) series.push_back(std::move(s));
    }
    if (!series.empty()) {
      SvgOptions opt;
      opt.title = "in-degree growth";
      opt.x_label = "t";
      opt.y_label = "mean in-degree";
      opt.log_x = true;
      write_file(dir / "popularity.svg", svg_line_chart(series, opt));
    }
  }

  if (r.spec.omega_series && !r.reps.front().omega_series.empty()) {
    SvgSeries s;
    s.label = "mean components";
    const std::size_t len = r.reps.front().omega_series.size();
    for (std::size_t t = 0; t < len; t += std::max<std::size_t>(1, len / 400)) {
      double sum = 0.0;
      for (const RepResult& rep : r.reps) sum += rep.omega_series[t];
      s.points.emplace_back(t + 1, sum / double(n_reps));
    }
    SvgOptions opt;
    opt.title = "non-singleton components";
    opt.x_label = "t";
    opt.y_label = "mean count";
    write_file(dir / "omega.svg", svg_line_chart({s}, opt));
  }
}

}  // namespace

void write_study_artifacts(const StudyResult& result, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_file(dir / "summary.json", study_summary_json(result));
  write_checkpoints_csv(result, dir);
  if (result.spec.collect_eft) write_eft_csv(result, dir);
  if (result.spec.omega_series) write_omega_csv(result, dir);
  if (!result.spec.tracked_agents.empty()) write_popularity_csv(result, dir);
  if (result.spec.degree_histograms) write_degree_hist_csv(result, dir);
  if (result.spec.betweenness_at_end) write_betweenness_csv(result, dir);
  write_charts(result, dir);
}

}  // namespace netform
