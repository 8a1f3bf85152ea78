#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "overbern/experiments.hpp"
#include "overbern/report_io.hpp"

using namespace overbern;

namespace {

BoundReport tiny_report() {
  BoundReport r;
  r.points.push_back({{0.25}, 0.1, 0.3, 0.2, 0});
  r.points.push_back({{0.5}, 0.2, 0.3, 0.1, 0});
  r.moduli_mode = "analytic";
  r.resolutions = {41};
  r.seed = 9;
  r.finalize();
  return r;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.25, 1e-17, 12345678.90123, -0.0078125,
                   0.4731564544}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("json report carries the documented schema") {
  const ExperimentConfig config;
  const std::string text = report_json(config, tiny_report(), false);
  const nlohmann::json j = nlohmann::json::parse(text);
  REQUIRE(j.contains("config"));
  REQUIRE(j.contains("aggregates"));
  REQUIRE(j.contains("points"));
  REQUIRE(j.contains("provenance"));
  CHECK_FALSE(j.contains("meta"));

  CHECK(j["config"]["experiment"] == "bound_univariate");
  CHECK(j["config"]["function_id"] == "e2");
  CHECK(j["aggregates"]["max_lhs"].get<double>() == 0.2);
  CHECK(j["aggregates"]["min_margin"].get<double>() == doctest::Approx(0.1));
  CHECK(j["aggregates"]["pass"].get<bool>());
  CHECK(j["points"].size() == 2);
  CHECK(j["points"][0]["point"][0].get<double>() == 0.25);
  CHECK(j["provenance"]["moduli_mode"] == "analytic");
  CHECK(j["provenance"]["seed"].get<std::uint64_t>() == 9);

  const std::string with_meta = report_json(config, tiny_report(), true);
  CHECK(nlohmann::json::parse(with_meta).contains("meta"));
}

TEST_CASE("csv header and exact round-trip") {
  const std::string csv = report_csv(tiny_report());
  REQUIRE(csv.rfind("x1,lhs,rhs,margin\n", 0) == 0);
  const std::string row = csv.substr(csv.find('\n') + 1);
  CHECK(row.rfind("0.25,0.1,0.3,0.2", 0) == 0);
}

TEST_CASE("csv for a bivariate report names both axes") {
  BoundReport r;
  r.points.push_back({{0.1, 0.9}, 0.0, 0.0, 0.0, 0});
  r.finalize();
  CHECK(report_csv(r).rfind("x1,x2,lhs,rhs,margin\n", 0) == 0);
}

TEST_CASE("config json round-trip mirrors field names") {
  ExperimentConfig c;
  c.experiment = Experiment::bound_tensor;
  c.function_id = "cos";
  c.degrees = {4, 4};
  c.powers = {30, 30};
  c.constant = 4.5;
  c.eval_resolution = 21;
  c.moduli_mode = ModuliMode::grid;
  c.seed = 77;
  c.h = 0.1;
  c.trials = 3;
  c.moduli_resolution = 111;
  c.fit_min = 5;
  c.fit_max = 44;

  const ExperimentConfig back = config_from_json(config_json(c));
  CHECK(back.experiment == c.experiment);
  CHECK(back.function_id == c.function_id);
  CHECK(back.degrees == c.degrees);
  CHECK(back.powers == c.powers);
  CHECK(back.constant == c.constant);
  CHECK(back.eval_resolution == c.eval_resolution);
  CHECK(back.moduli_mode == c.moduli_mode);
  CHECK(back.seed == c.seed);
  CHECK(back.h == c.h);
  CHECK(back.trials == c.trials);
  CHECK(back.moduli_resolution == c.moduli_resolution);
  CHECK(back.fit_min == c.fit_min);
  CHECK(back.fit_max == c.fit_max);
}

TEST_CASE("partial configs keep defaults, unknown keys are rejected") {
  const ExperimentConfig c =
      config_from_json(R"({"function_id":"abs","degrees":[7]})");
  CHECK(c.function_id == "abs");
  CHECK(c.degrees == std::vector<int>{7});
  CHECK(c.constant == 2.25);
  CHECK(c.powers == std::vector<long long>{10});

  CHECK_THROWS_AS(config_from_json(R"({"degree":[7]})"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"([1,2,3])"), std::invalid_argument);
}

TEST_CASE("zhuk reports label the two inequalities") {
  BoundReport r;
  r.points.push_back({{0.0}, 0.0, 1.0, 1.0, 1});
  r.points.push_back({{0.0}, 0.5, 2.0, 1.5, 2});
  r.finalize();
  const nlohmann::json j =
      nlohmann::json::parse(report_json(ExperimentConfig{}, r, false));
  CHECK(j["points"][0]["inequality"] == 1);
  CHECK(j["points"][1]["inequality"] == 2);
}
