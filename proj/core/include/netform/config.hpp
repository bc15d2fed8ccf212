// Loading, validating and round-tripping society descriptions. TOML is the
// human-facing format, JSON the machine one; both map onto the same
// SocietyConfig and the JSON writer is lossless.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netform/utility.hpp"

namespace netform {

// One violated invariant, addressed by field path ("type[2].cost").
struct ConfigIssue {
  std::string path;
  std::string message;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  static std::string render(const std::vector<ConfigIssue>& issues);
  std::vector<ConfigIssue> issues_;
};

// Every violated invariant, one entry per field; empty means usable.
std::vector<ConfigIssue> validate(const SocietyConfig& config);

// Parse + validate; throw ConfigError with the full issue list on any
// problem. Format picked by extension (.toml/.json), else sniffed.
SocietyConfig load_config(const std::filesystem::path& file);
SocietyConfig config_from_toml(std::string_view text);
SocietyConfig config_from_json(std::string_view text);

std::string config_to_json(const SocietyConfig& config);
std::string config_to_toml(const SocietyConfig& config);

// Quantities implied by a profile, echoed so a run's premises are auditable.
struct DerivedTypeQuantities {
  std::string name;
  std::uint32_t l_star0 = 0;      // solo saturation count
  std::uint32_t l_star_same = 0;  // same-type demand after cross-type fill
  std::uint32_t l_bar_cross = 0;  // cross-type links the type would hold alone
  double homophily = 0.0;
  double expected_eft = 0.0;      // NaN when no closed form applies
  bool may_stall = false;         // can stay unsatisfied forever
};

struct DerivedQuantities {
  std::vector<DerivedTypeQuantities> types;
  double mean_gregariousness = 0.0;
  double bonding_bound = 0.0;
  bool bonding_bound_tight = false;
  bool single_component_limit = false;
};

DerivedQuantities derive_quantities(const SocietyConfig& config);
std::string derived_quantities_json(const DerivedQuantities& dq);

}  // namespace netform
