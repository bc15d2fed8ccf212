// Canned study scenarios at desk scale. Each preset bundles one or more
// society variants plus the metrics worth recording for that scenario, and
// names the verification checks it backs.
#pragma once

#include <string>
#include <vector>

#include "netform/experiment.hpp"

namespace netform {

struct PresetVariant {
  std::string label;
  SocietyConfig config;
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<std::string> backs;  // slugs of verification checks this feeds
  std::vector<PresetVariant> variants;
  RunMetricsSpec metrics;
};

const std::vector<std::string>& preset_names();

// Throws std::invalid_argument for unknown names. scale stretches horizon and
// replication counts (0.1 = quick smoke run, 1 = desk defaults).
Preset make_preset(const std::string& name, double scale = 1.0);

}  // namespace netform
