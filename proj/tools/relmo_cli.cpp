// relmo: propagate a relative-motion scenario or run an error sweep against
// the Keplerian truth and write the results as CSV.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relmo/errors.hpp"
#include "relmo/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string config;
  std::string models;
  std::optional<int> orbits;
  std::optional<int> samples;
  std::string out;
  std::vector<double> values;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config, "JSON scenario file (angles in degrees)");
  cmd->add_option("--models", o.models, "comma-separated model list");
  cmd->add_option("--orbits", o.orbits, "number of chief orbits (default 10)");
  cmd->add_option("--samples", o.samples, "samples per orbit (default 1000)");
  cmd->add_option("--out", o.out, "output CSV path (default stdout)");
}

relmo::ScenarioConfig resolve_config(const CommonOptions& o) {
  relmo::ScenarioConfig cfg = o.config.empty() ? relmo::ScenarioConfig{} : relmo::load_config(o.config);
  if (o.orbits) cfg.n_orbits = *o.orbits;
  if (o.samples) cfg.samples_per_orbit = *o.samples;
  if (!o.models.empty()) cfg.models = relmo::parse_model_list(o.models);
  if (cfg.models.empty()) cfg.models = relmo::all_models();
  relmo::validate(cfg);
  return cfg;
}

template <class Writer>
void write_output(const std::string& path, Writer&& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw relmo::ConfigError("cannot open output file " + path);
  writer(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spacecraft relative-motion propagation and error sweeps"};
  app.require_subcommand(1);

  CommonOptions prop_opts, ecc_opts, sep_opts, da_opts;
  auto* prop = app.add_subcommand("propagate", "time series of one scenario for each model");
  add_common(prop, prop_opts);

  auto* ecc = app.add_subcommand("sweep-ecc", "maximum position error against chief eccentricity");
  add_common(ecc, ecc_opts);
  ecc->add_option("--values", ecc_opts.values, "eccentricities (default: 25 log-spaced in [1e-4, 0.9])")
      ->delimiter(',');

  auto* sep = app.add_subcommand("sweep-sep", "maximum position error against along-track offset a*dlambda");
  add_common(sep, sep_opts);
  sep->add_option("--values", sep_opts.values, "a*dlambda in km (default: 26 log-spaced in [0.1, 1e4])")
      ->delimiter(',');

  auto* da = app.add_subcommand("sweep-da", "maximum position error against a*da");
  add_common(da, da_opts);
  da->add_option("--values", da_opts.values, "a*da in km (default: 13 log-spaced in [0.01, 10])")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*prop) {
      const relmo::ScenarioConfig cfg = resolve_config(prop_opts);
      const relmo::Scenario sc = relmo::build_scenario(cfg);
      write_output(prop_opts.out, [&](std::ostream& os) {
        for (std::size_t m = 0; m < cfg.models.size(); ++m) {
          const auto series = relmo::propagate_series(cfg.models[m], sc);
          std::ostringstream block;
          relmo::emit_series_csv(series, cfg.models[m], block);
          std::string text = block.str();
          if (m > 0) text.erase(0, text.find('\n') + 1);  // single header row
          os << text;
        }
      });
      return 0;
    }

    struct Sweep {
      CLI::App* cmd;
      CommonOptions* opts;
      std::vector<double> defaults;
      std::vector<relmo::ErrorRecord> (*run)(const relmo::ScenarioConfig&, std::span<const double>,
                                             std::span<const relmo::ModelId>);
    };
    const Sweep sweeps[] = {
        {ecc, &ecc_opts, relmo::log_spaced(1e-4, 0.9, 25), &relmo::sweep_eccentricity},
        {sep, &sep_opts, relmo::log_spaced(0.1, 1e4, 26), &relmo::sweep_separation},
        {da, &da_opts, relmo::log_spaced(0.01, 10.0, 13), &relmo::sweep_delta_a},
    };
    for (const Sweep& s : sweeps) {
      if (!*s.cmd) continue;
      const relmo::ScenarioConfig cfg = resolve_config(*s.opts);
      const std::vector<double>& values = s.opts->values.empty() ? s.defaults : s.opts->values;
      const auto records = s.run(cfg, values, cfg.models);
      write_output(s.opts->out, [&](std::ostream& os) { relmo::emit_csv(records, os); });
      return 0;
    }
  } catch (const relmo::ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << '\n';
    return kExitConfig;
  } catch (const relmo::NumericalError& ex) {
    std::cerr << "numerical failure: " << ex.what() << '\n';
    return kExitNumerical;
  } catch (const relmo::DomainError& ex) {
    std::cerr << "numerical failure: " << ex.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
