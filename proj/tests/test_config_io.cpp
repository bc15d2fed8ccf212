#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "netform/config.hpp"
#include "netform/io.hpp"

using namespace netform;

namespace {
const char* kGoodToml = R"(# two-block society
horizon = 500
seed = 9
replications = 4
record_events = true

[[type]]
name = "closed"
share = 0.5
alpha_same = 2.0
alpha_diff = 0.0
cost = 0.9
curve = "sqrt"
curve_scale = 2.0
opportunism = 0.5

[[type]]
name = "mixed"
share = 0.5
alpha_same = 2.0
alpha_diff = 1.3
cost = 0.9
curve_scale = 2.0
)";
}  // namespace

TEST_CASE("TOML configs parse with defaults applied") {
  const SocietyConfig cfg = config_from_toml(kGoodToml);
  CHECK(cfg.horizon == 500);
  CHECK(cfg.seed == 9);
  CHECK(cfg.replications == 4);
  CHECK(cfg.options.record_events);
  REQUIRE(cfg.profiles.size() == 2);
  CHECK(cfg.profiles[0].name == "closed");
  CHECK(cfg.profiles[0].alpha_diff == 0.0);
  CHECK(cfg.profiles[0].opportunism == 0.5);
  CHECK(cfg.profiles[1].curve.family == CurveFamily::sqrt_like);  // default
  CHECK(cfg.profiles[1].alpha_diff == 1.3);
  CHECK(cfg.profiles[1].opportunism == 0.0);  // default
}

TEST_CASE("single-type configs may omit the share") {
  const SocietyConfig cfg = config_from_toml(
      "horizon = 100\n[[type]]\nalpha_same = 1.0\ncost = 0.5\ncurve_scale = 2.0\n");
  REQUIRE(cfg.profiles.size() == 1);
  CHECK(cfg.profiles[0].pop_share == 1.0);
  CHECK(cfg.profiles[0].alpha_diff == 1.0);    // defaults to alpha_same
  CHECK(cfg.profiles[0].name == "type0");      // generated label
}

TEST_CASE("config errors carry field paths") {
  auto issues_of = [](const char* text) {
    try {
      config_from_toml(text);
    } catch (const ConfigError& e) {
      return e.issues();
    }
    return std::vector<ConfigIssue>{};
  };

  SUBCASE("missing required keys") {
    const auto issues = issues_of("horizon = 100\n[[type]]\nalpha_same = 1.0\n");
    REQUIRE_FALSE(issues.empty());
    bool saw_cost = false;
    for (const auto& it : issues) saw_cost |= it.path == "type[0].cost";
    CHECK(saw_cost);
  }
  SUBCASE("unknown keys are flagged, not ignored") {
    const auto issues = issues_of(
        "horizon = 100\nhorzon = 5\n[[type]]\nalpha_same = 1.0\ncost = 0.5\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].path == "horzon");
  }
  SUBCASE("shares must sum to one") {
    const auto issues = issues_of(
        "horizon = 100\n"
        "[[type]]\nshare = 0.5\nalpha_same = 1.0\ncost = 0.5\n"
        "[[type]]\nshare = 0.6\nalpha_same = 1.0\ncost = 0.5\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].path == "type[*].share");
  }
  SUBCASE("cross weight may not exceed the own weight") {
    const auto issues = issues_of(
        "horizon = 100\n[[type]]\nalpha_same = 1.0\nalpha_diff = 1.5\ncost = 0.5\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].path == "type[0].alpha_diff");
  }
  SUBCASE("absurd saturation points are rejected without scanning") {
    const auto issues = issues_of(
        "horizon = 100\n[[type]]\nalpha_same = 1.0\ncost = 0.000001\ncurve_scale = 2.0\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].path == "type[0].cost");
  }
  SUBCASE("malformed TOML reports the line") {
    const auto issues = issues_of("horizon = = 3\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].message.find("line 1") != std::string::npos);
  }
}

TEST_CASE("JSON writer is lossless and idempotent") {
  const SocietyConfig cfg = config_from_toml(kGoodToml);
  const std::string j = config_to_json(cfg);
  const SocietyConfig back = config_from_json(j);
  CHECK(back == cfg);
  CHECK(config_to_json(back) == j);
}

TEST_CASE("TOML writer round-trips through the parser") {
  const SocietyConfig cfg = config_from_toml(kGoodToml);
  CHECK(config_from_toml(config_to_toml(cfg)) == cfg);
}

TEST_CASE("load_config dispatches on extension and sniffs otherwise") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() /
      ("netform-test-" +
       std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  ensure_dir(dir);
  const SocietyConfig cfg = config_from_toml(kGoodToml);
  write_file(dir / "a.toml", kGoodToml);
  write_file(dir / "b.json", config_to_json(cfg));
  write_file(dir / "c.conf", config_to_json(cfg));  // sniffed as JSON
  CHECK(load_config(dir / "a.toml") == cfg);
  CHECK(load_config(dir / "b.json") == cfg);
  CHECK(load_config(dir / "c.conf") == cfg);
  CHECK_THROWS_AS(load_config(dir / "missing.toml"), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("derived quantities echo the model's own arithmetic") {
  SocietyConfig cfg = config_from_toml(kGoodToml);
  const DerivedQuantities dq = derive_quantities(cfg);
  REQUIRE(dq.types.size() == 2);
  CHECK(dq.types[0].l_star0 == 2);
  CHECK(dq.types[0].homophily == 1.0);
  CHECK(dq.types[0].expected_eft == doctest::Approx(2.0 + 1.0 / 0.75));
  CHECK(dq.types[1].homophily == doctest::Approx(1.0 / 3.0));
  CHECK(std::isnan(dq.types[1].expected_eft));
  CHECK_FALSE(dq.types[0].may_stall);
  CHECK(dq.bonding_bound == doctest::Approx(2.2));
  CHECK_FALSE(dq.bonding_bound_tight);
  CHECK(dq.single_component_limit);
  const std::string j = derived_quantities_json(dq);
  CHECK(j.find("\"expected_formation_time\": null") != std::string::npos);
}

TEST_CASE("format_double text parses back to the same bits") {
  for (double x : {0.0, 1.0, -1.5, 1.0 / 3.0, 22.0 / 3.0, 1e-17, 6.02e23}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(1.0 / 0.0) == "inf");
  CHECK(format_double(-1.0 / 0.0) == "-inf");
}

TEST_CASE("CSV cells holding separators get quoted") {
  std::ostringstream out;
  write_csv(out, {"a", "b"}, {{"plain", "with,comma"}, {"with\"quote", "with\nnewline"}});
  CHECK(out.str() ==
        "a,b\n"
        "plain,\"with,comma\"\n"
        "\"with\"\"quote\",\"with\nnewline\"\n");
}

TEST_CASE("SVG charts are self-contained and label their series") {
  SvgSeries s1{"first", {{1.0, 2.0}, {2.0, 4.0}, {3.0, 3.0}}};
  SvgSeries s2{"second", {{1.0, 1.0}, {3.0, 9.0}}};
  SvgOptions opt;
  opt.title = "demo";
  opt.x_label = "t";
  opt.y_label = "y";
  const std::string svg = svg_line_chart({s1, s2}, opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(svg.find("first") != std::string::npos);
  CHECK(svg.find("second") != std::string::npos);
  // log axes must not choke on the same data
  opt.log_x = true;
  opt.log_y = true;
  CHECK(svg_line_chart({s1}, opt).find("</svg>") != std::string::npos);
}
