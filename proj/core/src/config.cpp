#include "netform/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "netform/dynamics.hpp"
#include "netform/io.hpp"
#include "netform/oracles.hpp"
#include "toml_lite.hpp"

namespace netform {

namespace {

using nlohmann::json;

std::string type_path(std::size_t k, const char* field) {
  return "type[" + std::to_string(k) + "]." + field;
}

// ".0" appended so the TOML writer always emits a float where one is meant.
std::string fmt_toml_float(double x) {
  std::string s = format_double(x);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

// Closed-form ceiling on the saturation scan so validation can reject
// pathological (cost, scale) combinations without running the scan.
double lstar_analytic_cap(const TypeProfile& p) {
  const double a = p.alpha_same, s = p.curve.scale, c = p.link_cost;
  if (a <= 0.0 || s <= 0.0 || c <= 0.0) return 0.0;
  if (p.curve.family == CurveFamily::sqrt_like)
    return 1.0 + (s * s * a) / (4.0 * c * c);
  return std::max(0.0, s / c);
}

constexpr double kMaxLstar = 100000.0;
constexpr double kShareSumTol = 1e-9;

bool finite(double x) { return std::isfinite(x); }

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(render(issues)), issues_(std::move(issues)) {}

std::string ConfigError::render(const std::vector<ConfigIssue>& issues) {
  std::ostringstream out;
  out << "invalid society configuration (" << issues.size() << " issue"
      << (issues.size() == 1 ? "" : "s") << ")";
  for (const auto& it : issues) out << "\n  " << it.path << ": " << it.message;
  return out.str();
}

std::vector<ConfigIssue> validate(const SocietyConfig& config) {
  std::vector<ConfigIssue> issues;
  auto bad = [&](std::string path, std::string message) {
    issues.push_back({std::move(path), std::move(message)});
  };

  if (config.profiles.empty()) bad("type", "at least one agent type is required");
  if (config.horizon < 2) bad("horizon", "must be at least 2 (one birth per step)");
  if (config.replications < 1) bad("replications", "must be at least 1");

  double share_sum = 0.0;
  std::set<std::string> seen_names;
  for (std::size_t k = 0; k < config.profiles.size(); ++k) {
    const TypeProfile& p = config.profiles[k];
    auto field = [&](const char* f) { return type_path(k, f); };

    if (!finite(p.alpha_same) || p.alpha_same <= 0.0)
      bad(field("alpha_same"), "must be finite and > 0");
    if (!finite(p.alpha_diff) || p.alpha_diff < 0.0)
      bad(field("alpha_diff"), "must be finite and >= 0");
    else if (finite(p.alpha_same) && p.alpha_diff > p.alpha_same)
      bad(field("alpha_diff"), "must not exceed alpha_same");
    if (!finite(p.link_cost) || p.link_cost <= 0.0)
      bad(field("cost"), "must be finite and > 0");
    if (!finite(p.curve.scale) || p.curve.scale <= 0.0)
      bad(field("curve_scale"), "must be finite and > 0");
    if (!finite(p.opportunism) || p.opportunism < 0.0 || p.opportunism > 1.0)
      bad(field("opportunism"), "must lie in [0, 1]");
    if (!finite(p.pop_share) || p.pop_share <= 0.0 || p.pop_share > 1.0)
      bad(field("share"), "must lie in (0, 1]");
    else
      share_sum += p.pop_share;

    if (finite(p.alpha_same) && p.alpha_same > 0.0 && finite(p.link_cost) &&
        p.link_cost > 0.0 && finite(p.curve.scale) && p.curve.scale > 0.0 &&
        lstar_analytic_cap(p) > kMaxLstar)
      bad(field("cost"), "saturation point exceeds 100000 links; raise cost or lower scale");

    if (!p.name.empty() && !seen_names.insert(p.name).second)
      bad(field("name"), "duplicate type name '" + p.name + "'");
  }
  if (!config.profiles.empty() && std::abs(share_sum - 1.0) > kShareSumTol)
    bad("type[*].share", "shares must sum to 1 (got " + format_double(share_sum) + ")");

  return issues;
}

namespace {

// --- TOML mapping ---------------------------------------------------------

struct IssueSink {
  std::vector<ConfigIssue> issues;
  void add(std::string path, std::string message) {
    issues.push_back({std::move(path), std::move(message)});
  }
  void raise_if_any() {
    if (!issues.empty()) throw ConfigError(std::move(issues));
  }
};

CurveFamily parse_family(const std::string& s, const std::string& path, IssueSink& sink) {
  if (s == "sqrt") return CurveFamily::sqrt_like;
  if (s == "log") return CurveFamily::log_like;
  sink.add(path, "curve must be \"sqrt\" or \"log\", got \"" + s + "\"");
  return CurveFamily::sqrt_like;
}

double want_number(const toml_lite::Value& v, const std::string& path, IssueSink& sink) {
  if (v.is_number()) return v.as_double();
  sink.add(path, "expected a number");
  return 0.0;
}

std::uint64_t want_uint(const toml_lite::Value& v, const std::string& path, IssueSink& sink) {
  if (v.kind == toml_lite::Value::Kind::integer && v.i >= 0)
    return static_cast<std::uint64_t>(v.i);
  sink.add(path, "expected a non-negative integer");
  return 0;
}

void finish_profile_defaults(SocietyConfig& cfg) {
  for (std::size_t k = 0; k < cfg.profiles.size(); ++k)
    if (cfg.profiles[k].name.empty()) cfg.profiles[k].name = "type" + std::to_string(k);
}

SocietyConfig from_toml_table(const toml_lite::Table& root) {
  IssueSink sink;
  SocietyConfig cfg;
  cfg.horizon = 0;  // horizon is required in files; 0 trips validate() if absent

  static const std::set<std::string> kTopKeys = {"horizon", "seed", "replications",
                                                 "record_events"};
  static const std::set<std::string> kTypeKeys = {
      "name", "share",       "alpha_same",  "alpha_diff",
      "cost", "curve",       "curve_scale", "opportunism"};

  for (const auto& [key, value] : root.values) {
    if (!kTopKeys.count(key)) {
      sink.add(key, "unknown key");
      continue;
    }
    if (key == "horizon") cfg.horizon = static_cast<std::uint32_t>(want_uint(value, key, sink));
    else if (key == "seed") cfg.seed = want_uint(value, key, sink);
    else if (key == "replications")
      cfg.replications = static_cast<std::uint32_t>(want_uint(value, key, sink));
    else if (key == "record_events") {
      if (value.kind == toml_lite::Value::Kind::boolean) cfg.options.record_events = value.b;
      else sink.add(key, "expected true or false");
    }
  }
  if (!root.values.count("horizon")) sink.add("horizon", "required key is missing");
  for (const auto& [name, table] : root.tables) {
    (void)table;
    sink.add(name, "unknown table (only [[type]] entries are recognized)");
  }
  for (const auto& [name, tables] : root.arrays)
    if (name != "type")
      sink.add(name, "unknown table array (only [[type]] entries are recognized)");

  const auto it = root.arrays.find("type");
  const std::size_t n_types = (it == root.arrays.end()) ? 0 : it->second.size();
  for (std::size_t k = 0; k < n_types; ++k) {
    const toml_lite::Table& t = it->second[k];
    TypeProfile p;
    bool have_alpha_diff = false;

    for (const auto& [key, value] : t.values) {
      const std::string path = type_path(k, key.c_str());
      if (!kTypeKeys.count(key)) {
        sink.add(path, "unknown key");
        continue;
      }
      if (key == "name") {
        if (value.kind == toml_lite::Value::Kind::string) p.name = value.s;
        else sink.add(path, "expected a string");
      } else if (key == "share") p.pop_share = want_number(value, path, sink);
      else if (key == "alpha_same") p.alpha_same = want_number(value, path, sink);
      else if (key == "alpha_diff") {
        p.alpha_diff = want_number(value, path, sink);
        have_alpha_diff = true;
      } else if (key == "cost") p.link_cost = want_number(value, path, sink);
      else if (key == "curve") {
        if (value.kind == toml_lite::Value::Kind::string)
          p.curve.family = parse_family(value.s, path, sink);
        else sink.add(path, "expected a string");
      } else if (key == "curve_scale") p.curve.scale = want_number(value, path, sink);
      else if (key == "opportunism") p.opportunism = want_number(value, path, sink);
    }

    for (const char* req : {"alpha_same", "cost"})
      if (!t.values.count(req)) sink.add(type_path(k, req), "required key is missing");
    if (!t.values.count("share")) {
      if (n_types == 1) p.pop_share = 1.0;
      else sink.add(type_path(k, "share"), "required when there is more than one type");
    }
    if (!have_alpha_diff) p.alpha_diff = p.alpha_same;

    if (!t.tables.empty() || !t.arrays.empty())
      sink.add(type_path(k, ""), "nested tables are not recognized");

    cfg.profiles.push_back(std::move(p));
  }
  if (n_types == 0) sink.add("type", "at least one [[type]] entry is required");

  sink.raise_if_any();
  finish_profile_defaults(cfg);
  for (auto& issue : validate(cfg)) sink.issues.push_back(std::move(issue));
  sink.raise_if_any();
  return cfg;
}

// --- JSON mapping ----------------------------------------------------------

SocietyConfig from_json_value(const json& root) {
  IssueSink sink;
  SocietyConfig cfg;
  cfg.horizon = 0;

  if (!root.is_object()) {
    sink.add("$", "top level must be an object");
    sink.raise_if_any();
  }

  static const std::set<std::string> kTopKeys = {"horizon", "seed", "replications",
                                                 "record_events", "types"};
  static const std::set<std::string> kTypeKeys = {
      "name", "share",       "alpha_same",  "alpha_diff",
      "cost", "curve",       "curve_scale", "opportunism"};

  auto num = [&](const json& v, const std::string& path, double& out) {
    if (v.is_number()) out = v.get<double>();
    else sink.add(path, "expected a number");
  };

  for (const auto& [key, value] : root.items()) {
    if (!kTopKeys.count(key)) {
      sink.add(key, "unknown key");
      continue;
    }
    if (key == "types") continue;
    if (key == "record_events") {
      if (value.is_boolean()) cfg.options.record_events = value.get<bool>();
      else sink.add(key, "expected a boolean");
      continue;
    }
    if (!value.is_number_unsigned()) {
      sink.add(key, "expected a non-negative integer");
      continue;
    }
    if (key == "horizon") cfg.horizon = value.get<std::uint32_t>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "replications") cfg.replications = value.get<std::uint32_t>();
  }
  if (!root.contains("horizon")) sink.add("horizon", "required key is missing");

  if (!root.contains("types") || !root["types"].is_array() || root["types"].empty()) {
    sink.add("types", "a non-empty array of type objects is required");
  } else {
    const json& types = root["types"];
    for (std::size_t k = 0; k < types.size(); ++k) {
      const json& t = types[k];
      TypeProfile p;
      bool have_alpha_diff = false;
      if (!t.is_object()) {
        sink.add("types[" + std::to_string(k) + "]", "expected an object");
        cfg.profiles.push_back(p);
        continue;
      }
      for (const auto& [key, value] : t.items()) {
        const std::string path = type_path(k, key.c_str());
        if (!kTypeKeys.count(key)) {
          sink.add(path, "unknown key");
          continue;
        }
        if (key == "name") {
          if (value.is_string()) p.name = value.get<std::string>();
          else sink.add(path, "expected a string");
        } else if (key == "share") num(value, path, p.pop_share);
        else if (key == "alpha_same") num(value, path, p.alpha_same);
        else if (key == "alpha_diff") {
          num(value, path, p.alpha_diff);
          have_alpha_diff = true;
        } else if (key == "cost") num(value, path, p.link_cost);
        else if (key == "curve") {
          if (value.is_string()) p.curve.family = parse_family(value.get<std::string>(), path, sink);
          else sink.add(path, "expected a string");
        } else if (key == "curve_scale") num(value, path, p.curve.scale);
        else if (key == "opportunism") num(value, path, p.opportunism);
      }
      for (const char* req : {"alpha_same", "cost"})
        if (!t.contains(req)) sink.add(type_path(k, req), "required key is missing");
      if (!t.contains("share")) {
        if (types.size() == 1) p.pop_share = 1.0;
        else sink.add(type_path(k, "share"), "required when there is more than one type");
      }
      if (!have_alpha_diff) p.alpha_diff = p.alpha_same;
      cfg.profiles.push_back(std::move(p));
    }
  }

  sink.raise_if_any();
  finish_profile_defaults(cfg);
  for (auto& issue : validate(cfg)) sink.issues.push_back(std::move(issue));
  sink.raise_if_any();
  return cfg;
}

}  // namespace

SocietyConfig config_from_toml(std::string_view text) {
  try {
    return from_toml_table(toml_lite::parse(text));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::vector<ConfigIssue>{{"$", e.what()}});
  }
}

SocietyConfig config_from_json(std::string_view text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) throw ConfigError(std::vector<ConfigIssue>{{"$", "malformed JSON"}});
  return from_json_value(root);
}

SocietyConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError(std::vector<ConfigIssue>{{file.string(), "cannot open file"}});
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::string ext = file.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".json") return config_from_json(text);
  if (ext == ".toml") return config_from_toml(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return config_from_json(text);
  return config_from_toml(text);
}

std::string config_to_json(const SocietyConfig& config) {
  json root;
  root["horizon"] = config.horizon;
  root["seed"] = config.seed;
  root["replications"] = config.replications;
  root["record_events"] = config.options.record_events;
  json types = json::array();
  for (const TypeProfile& p : config.profiles) {
    json t;
    t["name"] = p.name;
    t["share"] = p.pop_share;
    t["alpha_same"] = p.alpha_same;
    t["alpha_diff"] = p.alpha_diff;
    t["cost"] = p.link_cost;
    t["curve"] = to_string(p.curve.family);
    t["curve_scale"] = p.curve.scale;
    t["opportunism"] = p.opportunism;
    types.push_back(std::move(t));
  }
  root["types"] = std::move(types);
  return root.dump(2);
}

std::string config_to_toml(const SocietyConfig& config) {
  std::ostringstream out;
  out << "horizon = " << config.horizon << "\n"
      << "seed = " << config.seed << "\n"
      << "replications = " << config.replications << "\n"
      << "record_events = " << (config.options.record_events ? "true" : "false") << "\n";
  for (const TypeProfile& p : config.profiles) {
    out << "\n[[type]]\n"
        << "name = \"" << p.name << "\"\n"
        << "share = " << fmt_toml_float(p.pop_share) << "\n"
        << "alpha_same = " << fmt_toml_float(p.alpha_same) << "\n"
        << "alpha_diff = " << fmt_toml_float(p.alpha_diff) << "\n"
        << "cost = " << fmt_toml_float(p.link_cost) << "\n"
        << "curve = \"" << to_string(p.curve.family) << "\"\n"
        << "curve_scale = " << fmt_toml_float(p.curve.scale) << "\n"
        << "opportunism = " << fmt_toml_float(p.opportunism) << "\n";
  }
  return out.str();
}

DerivedQuantities derive_quantities(const SocietyConfig& config) {
  DerivedQuantities dq;
  const auto stall = detect_potentially_unsatisfied(config);
  for (std::size_t k = 0; k < config.profiles.size(); ++k) {
    const TypeProfile& p = config.profiles[k];
    DerivedTypeQuantities t;
    t.name = p.name.empty() ? "type" + std::to_string(k) : p.name;
    t.l_star0 = compute_L_star(p);
    t.l_bar_cross = compute_Lbar_star(p);
    t.l_star_same = compute_L_star(p, p.alpha_diff * t.l_bar_cross);
    t.homophily = exogenous_homophily_index(p);
    const auto eeft = eeft_closed_form(p);
    t.expected_eft = eeft.regime.ok ? eeft.value : std::nan("");
    t.may_stall = std::find(stall.begin(), stall.end(), static_cast<std::uint32_t>(k)) !=
                  stall.end();
    dq.types.push_back(std::move(t));
  }
  dq.mean_gregariousness = mean_gregariousness(config);
  const BondingBound bound = optimal_bonding_bound(config);
  dq.bonding_bound = bound.value;
  dq.bonding_bound_tight = bound.attained_iff_all_extreme;
  dq.single_component_limit = connectedness_predicate(config);
  return dq;
}

std::string derived_quantities_json(const DerivedQuantities& dq) {
  json root;
  json types = json::array();
  for (const auto& t : dq.types) {
    json jt;
    jt["name"] = t.name;
    jt["gregariousness"] = t.l_star0;
    jt["same_type_demand"] = t.l_star_same;
    jt["cross_type_fill"] = t.l_bar_cross;
    jt["homophily"] = t.homophily;
    if (std::isnan(t.expected_eft)) jt["expected_formation_time"] = nullptr;
    else jt["expected_formation_time"] = t.expected_eft;
    jt["may_stall"] = t.may_stall;
    types.push_back(std::move(jt));
  }
  root["types"] = std::move(types);
  root["mean_gregariousness"] = dq.mean_gregariousness;
  root["bonding_bound"] = dq.bonding_bound;
  root["bonding_bound_tight"] = dq.bonding_bound_tight;
  root["single_component_limit"] = dq.single_component_limit;
  return root.dump(2);
}

}  // namespace netform
