// Artifact writers: CSV tables, trajectory dumps, and small self-contained
// SVG charts. Everything is deterministic text so runs can be diffed.
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "netform/dynamics.hpp"

namespace netform {

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double x);

// RFC-4180-ish: cells holding commas, quotes or newlines get quoted.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// from,to,t — one row per directed edge, formation order.
void write_edges_csv(std::ostream& out, const EvolvingGraph& g);

// t,actor,met,via,linked — requires the run to have recorded events.
void write_events_csv(std::ostream& out, const std::vector<StepEvent>& events);

void ensure_dir(const std::filesystem::path& dir);
void write_file(const std::filesystem::path& file, const std::string& content);
std::string read_file(const std::filesystem::path& file);

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
  std::string title, x_label, y_label;
  bool log_x = false, log_y = false;
  int width = 860, height = 520;
};

std::string svg_line_chart(const std::vector<SvgSeries>& series, const SvgOptions& opt);

}  // namespace netform
