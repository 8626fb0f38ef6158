#pragma once

// Scenario construction, error metrics against the Keplerian truth, and the
// eccentricity / separation / semimajor-axis sweeps.

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relmo/frames.hpp"
#include "relmo/kepler.hpp"

namespace relmo {

enum class ModelId {
  cw_rect,
  cw_curv,
  ya_rect,
  ya_curv,
  qv_curv_circular,
  second_order_curv,
  roe_order1,
  roe_order2,
};

std::string_view to_string(ModelId id);
/// Throws ConfigError for unknown names.
ModelId parse_model_id(std::string_view name);
/// Comma-separated list, e.g. "ya_curv,second_order_curv".
std::vector<ModelId> parse_model_list(std::string_view list);
std::vector<ModelId> all_models();

struct ScenarioConfig {
  std::string scenario_id = "scenario";
  double h_p = 750.0;  // perigee altitude, km
  double i = 98.0 * 0.017453292519943295;
  double raan = 30.0 * 0.017453292519943295;
  double argp = 30.0 * 0.017453292519943295;
  double f0 = 0.0;
  double e = 0.0;
  std::array<double, 6> roe_km{0.0, 0.0, 0.0, 2.0, 0.0, 2.0};  // a * (da, dlambda, dex, dey, dix, diy)
  int n_orbits = 10;
  int samples_per_orbit = 1000;
  std::vector<ModelId> models;
};

/// Throws ConfigError on h_p <= 0, e outside [0, 1), n_orbits < 1 or
/// samples_per_orbit < 10.
void validate(const ScenarioConfig& config);

struct Scenario {
  ClassicalElements chief;
  ClassicalElements deputy;
  std::vector<double> times;  // seconds since epoch, uniform, both ends included
  GravContext ctx;
};

/// Chief with perigee altitude held at h_p: a = (R_E + h_p) / (1 - e).
Scenario build_scenario(const ScenarioConfig& config, const GravContext& ctx = {});

/// Approximate relative state after `t` seconds for one model, initialized
/// from the exact relative state at the epoch.
using Propagator = std::function<RelStateCartesian(double t)>;
Propagator make_propagator(ModelId model, const Scenario& scenario);

struct ErrorRecord {
  std::string scenario_id;
  ModelId model = ModelId::second_order_curv;
  std::string sweep_param_name;
  double sweep_value = 0.0;
  double e = 0.0;
  double adlambda_km = 0.0;
  double max_err_km = 0.0;
  double t_max_s = 0.0;
};

/// Largest position error (RTN Cartesian, km) over the scenario's time grid.
/// The sweep fields of the record are left for the caller.
ErrorRecord max_position_error(ModelId model, const Scenario& scenario);

struct SeriesSample {
  double t = 0.0;
  RelStateCartesian model;
  RelStateCartesian truth;
  double err_km = 0.0;
};
std::vector<SeriesSample> propagate_series(ModelId model, const Scenario& scenario);

/// Records are sorted by (model, sweep value).
std::vector<ErrorRecord> sweep_eccentricity(const ScenarioConfig& base, std::span<const double> eccentricities,
                                            std::span<const ModelId> models);
std::vector<ErrorRecord> sweep_separation(const ScenarioConfig& base, std::span<const double> adlambda_km,
                                          std::span<const ModelId> models);
std::vector<ErrorRecord> sweep_delta_a(const ScenarioConfig& base, std::span<const double> ada_km,
                                       std::span<const ModelId> models);

/// Logarithmically spaced values, both ends included.
std::vector<double> log_spaced(double lo, double hi, int count);

// --- I/O -------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "scenario_id,model,sweep_param_name,sweep_value,e,adlambda_km,max_err_km,t_max_s";

/// Throws DomainError for an empty record list.
void emit_csv(std::span<const ErrorRecord> records, std::ostream& out);
void emit_csv(std::span<const ErrorRecord> records, const std::filesystem::path& path);
std::vector<ErrorRecord> parse_csv(std::istream& in);

void emit_series_csv(std::span<const SeriesSample> samples, ModelId model, std::ostream& out);

/// JSON scenario file; angles are in degrees, lengths in km.
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig config_from_json_text(std::string_view text);

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double v);

}  // namespace relmo
