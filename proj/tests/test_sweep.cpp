#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <relmo/errors.hpp>
#include <relmo/kepler.hpp>
#include <relmo/sweep.hpp>

#include <numbers>
#include <sstream>

using namespace relmo;

namespace {
ScenarioConfig small(double e) {
  ScenarioConfig c;
  c.scenario_id = "unit";
  c.e = e;
  c.n_orbits = 2;
  c.samples_per_orbit = 200;
  return c;
}

std::string csv_of(const std::vector<ErrorRecord>& records) {
  std::ostringstream out;
  emit_csv(records, out);
  return out.str();
}
}  // namespace

TEST_CASE("model ids") {
  for (ModelId m : all_models()) CHECK(parse_model_id(to_string(m)) == m);
  CHECK(all_models().size() == 8);
  CHECK_THROWS_AS(parse_model_id("hcw"), ConfigError);
  CHECK(parse_model_list("ya_curv,roe_order2") == std::vector<ModelId>{ModelId::ya_curv, ModelId::roe_order2});
  CHECK_THROWS_AS(parse_model_list(""), ConfigError);
}

TEST_CASE("build_scenario") {
  const auto s = build_scenario(small(0.0));
  CHECK(std::abs(s.chief.a - 7128.137) < 1e-9);
  CHECK(std::abs(build_scenario(small(0.5)).chief.a - 14256.274) < 1e-9);
  CHECK(s.times.size() == 401);
  CHECK(s.times.front() == 0.0);
  CHECK(std::abs(s.times.back() - 2 * orbital_period(s.chief.a, s.ctx)) < 1e-9);

  auto zero = small(0.1);
  zero.roe_km = {0, 0, 0, 0, 0, 0};
  const auto z = build_scenario(zero);
  CHECK(to_vector(truth_relative_state(z.chief, z.deputy, z.ctx)).norm() == 0.0);

  auto bad = small(1.0);
  CHECK_THROWS_AS(build_scenario(bad), ConfigError);
  bad = small(0.1);
  bad.samples_per_orbit = 5;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = small(0.1);
  bad.h_p = -1.0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("every model is exact at epoch") {
  const auto s = build_scenario(small(0.2));
  for (ModelId m : all_models()) {
    const auto series = propagate_series(m, s);
    CHECK(series.front().err_km <= 1e-9);
  }
}

TEST_CASE("co-orbital along-track separation is exact for the curvilinear CW model") {
  auto c = small(0.0);
  c.roe_km = {0, 50.0, 0, 0, 0, 0};
  CHECK(max_position_error(ModelId::cw_curv, build_scenario(c)).max_err_km < 1e-8);
}

TEST_CASE("second order beats first order on the centered scenario") {
  auto c = small(0.1);
  c.n_orbits = 10;
  c.samples_per_orbit = 100;
  const auto s = build_scenario(c);
  const double ya = max_position_error(ModelId::ya_curv, s).max_err_km;
  const double so = max_position_error(ModelId::second_order_curv, s).max_err_km;
  CHECK(ya / so >= 100.0);
}

TEST_CASE("along-track offset: curvilinear second order far ahead of rectilinear") {
  auto c = small(1e-3);
  c.roe_km = {0, 4.0, 0, 0, 0, 0};
  const auto s = build_scenario(c);
  CHECK(max_position_error(ModelId::second_order_curv, s).max_err_km * 100 <
        max_position_error(ModelId::ya_rect, s).max_err_km);
}

TEST_CASE("sweeps") {
  const std::vector<ModelId> models{ModelId::cw_rect, ModelId::cw_curv, ModelId::ya_curv};
  const std::vector<double> one{0.05};
  CHECK(sweep_eccentricity(small(0.0), one, models).size() == models.size());

  SUBCASE("ordering and parameter names") {
    const std::vector<double> es{0.2, 0.02, 0.05};
    const auto recs = sweep_eccentricity(small(0.0), es, models);
    REQUIRE(recs.size() == 9);
    for (std::size_t j = 1; j < recs.size(); ++j) {
      const bool ordered = recs[j - 1].model < recs[j].model ||
                           (recs[j - 1].model == recs[j].model && recs[j - 1].sweep_value <= recs[j].sweep_value);
      CHECK(ordered);
    }
    CHECK(recs.front().sweep_param_name == "e");
    // CW models degrade as e grows
    for (std::size_t j = 0; j < 6; j += 3) {
      CHECK(recs[j].max_err_km < recs[j + 1].max_err_km);
      CHECK(recs[j + 1].max_err_km < recs[j + 2].max_err_km);
    }
  }
  SUBCASE("zero separation reproduces the eccentricity slice") {
    const std::vector<double> zero{0.0};
    const std::vector<double> e3{1e-3};
    const auto a = sweep_separation(small(1e-3), zero, models);
    const auto b = sweep_eccentricity(small(1e-3), e3, models);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j].max_err_km == b[j].max_err_km);
    CHECK(a.front().sweep_param_name == "adlambda_km");
  }
  SUBCASE("delta-a sweep at zero offset is near exact") {
    const std::vector<double> zero{0.0};
    const std::vector<ModelId> roe{ModelId::roe_order1, ModelId::roe_order2, ModelId::second_order_curv};
    auto c = small(0.1);
    c.roe_km = {0, 0, 0, 0, 0, 0};
    for (const auto& r : sweep_delta_a(c, zero, roe)) CHECK(r.max_err_km < 1e-9);
  }
}

TEST_CASE("records are independent of the model list and deterministic") {
  const std::vector<double> es{0.01, 0.3};
  const std::vector<ModelId> both{ModelId::ya_rect, ModelId::second_order_curv};
  const std::vector<ModelId> only{ModelId::second_order_curv};
  const auto a = sweep_eccentricity(small(0.0), es, both);
  const auto b = sweep_eccentricity(small(0.0), es, only);
  CHECK(a[2].max_err_km == b[0].max_err_km);
  CHECK(a[3].max_err_km == b[1].max_err_km);
  CHECK(csv_of(a) == csv_of(sweep_eccentricity(small(0.0), es, both)));
}

TEST_CASE("csv") {
  ErrorRecord r{"s1", ModelId::ya_curv, "e", 0.1, 0.1, 0.0, 1.0 / 3.0, 12345.678901234567};
  const std::string text = csv_of({r});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  std::istringstream in(text);
  const auto back = parse_csv(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0].scenario_id == "s1");
  CHECK(back[0].model == ModelId::ya_curv);
  CHECK(back[0].max_err_km == r.max_err_km);
  CHECK(back[0].t_max_s == r.t_max_s);
  CHECK_THROWS_AS(emit_csv(std::vector<ErrorRecord>{}, std::cout), DomainError);
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("json config") {
  const auto c = config_from_json_text(
      R"({"scenario_id": "x", "e": 0.2, "i": 90, "roe_km": [0, 1, 0, 2, 0, 2], "models": ["ya_curv"]})");
  CHECK(c.scenario_id == "x");
  CHECK(c.e == 0.2);
  CHECK(std::abs(c.i - std::numbers::pi / 2) < 1e-15);
  CHECK(c.roe_km[1] == 1.0);
  CHECK(c.models == std::vector<ModelId>{ModelId::ya_curv});
  CHECK_THROWS_AS(config_from_json_text(R"({"eccentricity": 0.1})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"e": "big"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("[1, 2"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}
