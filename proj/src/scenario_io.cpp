#include <charconv>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "relmo/errors.hpp"
#include "relmo/sweep.hpp"

namespace relmo {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("malformed number '" + text + "' in CSV");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw NumericalError("format_double: conversion failed");
  return {buf, ptr};
}

void emit_csv(std::span<const ErrorRecord> records, std::ostream& out) {
  if (records.empty()) throw DomainError("emit_csv: no records to write");
  out << kCsvHeader << '\n';
  for (const ErrorRecord& r : records) {
    out << r.scenario_id << ',' << to_string(r.model) << ',' << r.sweep_param_name << ','
        << format_double(r.sweep_value) << ',' << format_double(r.e) << ',' << format_double(r.adlambda_km) << ','
        << format_double(r.max_err_km) << ',' << format_double(r.t_max_s) << '\n';
  }
  if (!out) throw std::runtime_error("emit_csv: write failed");
}

void emit_csv(std::span<const ErrorRecord> records, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("emit_csv: cannot open " + path.string());
  emit_csv(records, file);
}

std::vector<ErrorRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("parse_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ConfigError("parse_csv: unexpected header '" + line + "'");
  std::vector<ErrorRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8) throw ConfigError("parse_csv: expected 8 fields in '" + line + "'");
    ErrorRecord r;
    r.scenario_id = f[0];
    r.model = parse_model_id(f[1]);
    r.sweep_param_name = f[2];
    r.sweep_value = parse_double(f[3]);
    r.e = parse_double(f[4]);
    r.adlambda_km = parse_double(f[5]);
    r.max_err_km = parse_double(f[6]);
    r.t_max_s = parse_double(f[7]);
    out.push_back(std::move(r));
  }
  return out;
}

void emit_series_csv(std::span<const SeriesSample> samples, ModelId model, std::ostream& out) {
  out << "t_s,model,x_km,y_km,z_km,truth_x_km,truth_y_km,truth_z_km,err_km\n";
  for (const SeriesSample& s : samples) {
    out << format_double(s.t) << ',' << to_string(model) << ',' << format_double(s.model.x) << ','
        << format_double(s.model.y) << ',' << format_double(s.model.z) << ',' << format_double(s.truth.x) << ','
        << format_double(s.truth.y) << ',' << format_double(s.truth.z) << ',' << format_double(s.err_km) << '\n';
  }
}

ScenarioConfig config_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ScenarioConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "scenario_id") {
        c.scenario_id = value.get<std::string>();
      } else if (key == "h_p") {
        c.h_p = value.get<double>();
      } else if (key == "i") {
        c.i = value.get<double>() * kDeg;
      } else if (key == "raan") {
        c.raan = value.get<double>() * kDeg;
      } else if (key == "argp") {
        c.argp = value.get<double>() * kDeg;
      } else if (key == "f0") {
        c.f0 = value.get<double>() * kDeg;
      } else if (key == "e") {
        c.e = value.get<double>();
      } else if (key == "roe_km") {
        const auto v = value.get<std::vector<double>>();
        if (v.size() != 6) throw ConfigError("roe_km must have six entries");
        std::copy(v.begin(), v.end(), c.roe_km.begin());
      } else if (key == "n_orbits") {
        c.n_orbits = value.get<int>();
      } else if (key == "samples_per_orbit") {
        c.samples_per_orbit = value.get<int>();
      } else if (key == "models") {
        c.models.clear();
        for (const auto& m : value) c.models.push_back(parse_model_id(m.get<std::string>()));
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("config field has the wrong type: ") + ex.what());
  }
  if (c.scenario_id.find(',') != std::string::npos) throw ConfigError("scenario_id may not contain commas");
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  return config_from_json_text(text.str());
}

}  // namespace relmo
