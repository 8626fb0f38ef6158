#include "relmo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "relmo/errors.hpp"
#include "relmo/linear.hpp"
#include "relmo/roe.hpp"
#include "relmo/second_order.hpp"

namespace relmo {

namespace {

constexpr std::array<std::pair<ModelId, std::string_view>, 8> kModelNames{{
    {ModelId::cw_rect, "cw_rect"},
    {ModelId::cw_curv, "cw_curv"},
    {ModelId::ya_rect, "ya_rect"},
    {ModelId::ya_curv, "ya_curv"},
    {ModelId::qv_curv_circular, "qv_curv_circular"},
    {ModelId::second_order_curv, "second_order_curv"},
    {ModelId::roe_order1, "roe_order1"},
    {ModelId::roe_order2, "roe_order2"},
}};

Eigen::Vector3d position(const RelStateCartesian& s) { return {s.x, s.y, s.z}; }

// Circular-orbit models see the chief as a circle of radius a at mean motion n.
struct CircularFrame {
  double a;
  double n;
};

}  // namespace

std::string_view to_string(ModelId id) {
  for (const auto& [model, name] : kModelNames) {
    if (model == id) return name;
  }
  return "unknown";
}

ModelId parse_model_id(std::string_view name) {
  for (const auto& [model, n] : kModelNames) {
    if (n == name) return model;
  }
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

std::vector<ModelId> parse_model_list(std::string_view list) {
  std::vector<ModelId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? list.size() : comma;
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_model_id(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw ConfigError("empty model list");
  return out;
}

std::vector<ModelId> all_models() {
  std::vector<ModelId> out;
  for (const auto& entry : kModelNames) out.push_back(entry.first);
  return out;
}

void validate(const ScenarioConfig& c) {
  std::ostringstream msg;
  if (!(c.h_p > 0.0)) msg << "h_p must be positive; ";
  if (!(c.e >= 0.0 && c.e < 1.0)) msg << "e must lie in [0, 1); ";
  if (!(c.i >= 0.0 && c.i <= 3.141592653589793)) msg << "i must lie in [0, 180] deg; ";
  if (c.n_orbits < 1) msg << "n_orbits must be >= 1; ";
  if (c.samples_per_orbit < 10) msg << "samples_per_orbit must be >= 10; ";
  for (double v : c.roe_km) {
    if (!std::isfinite(v)) msg << "roe_km entries must be finite; ";
  }
  if (!msg.str().empty()) throw ConfigError("invalid scenario '" + c.scenario_id + "': " + msg.str());
}

Scenario build_scenario(const ScenarioConfig& config, const GravContext& ctx) {
  validate(config);
  Scenario sc;
  sc.ctx = ctx;
  sc.chief.a = (kEarthRadius + config.h_p) / (1.0 - config.e);
  sc.chief.e = config.e;
  sc.chief.i = config.i;
  sc.chief.raan = config.raan;
  sc.chief.argp = config.argp;
  sc.chief.anomaly = config.f0;
  sc.chief.kind = AnomalyKind::true_anomaly;

  ROEVector roe;
  roe.da = config.roe_km[0] / sc.chief.a;
  roe.dlambda = config.roe_km[1] / sc.chief.a;
  roe.dex = config.roe_km[2] / sc.chief.a;
  roe.dey = config.roe_km[3] / sc.chief.a;
  roe.dix = config.roe_km[4] / sc.chief.a;
  roe.diy = config.roe_km[5] / sc.chief.a;
  sc.deputy = elements_from_roe(sc.chief, roe);

  const int n = config.n_orbits * config.samples_per_orbit;
  const double total = config.n_orbits * orbital_period(sc.chief.a, ctx);
  sc.times.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) sc.times[static_cast<std::size_t>(j)] = total * j / n;
  return sc;
}

Propagator make_propagator(ModelId model, const Scenario& sc) {
  const GravContext ctx = sc.ctx;
  const ClassicalElements chief = sc.chief;
  const RelStateCartesian x0 = truth_relative_state(sc.chief, sc.deputy, ctx);
  const ChiefSnapshot snap0 = chief_snapshot(chief, ctx);
  const CircularFrame circ{chief.a, mean_motion(chief.a, ctx)};
  auto snapshot_at = [chief, ctx](double t) { return chief_snapshot(propagate_elements(chief, t, ctx), ctx); };

  switch (model) {
    case ModelId::cw_rect:
      return [x0, circ](double t) { return cw_propagate(x0, circ.n, t); };

    case ModelId::cw_curv: {
      const RelStateSpherical s0 = spherical_from_cartesian(x0, snap0);
      const Vector6d v0 = (Vector6d() << s0.rho, circ.a * s0.theta, circ.a * s0.phi, s0.rhodot,
                           circ.a * s0.thetadot, circ.a * s0.phidot).finished();
      return [v0, circ, snapshot_at, x0](double t) {
        if (t == 0.0) return x0;
        const Vector6d v = cw_propagate(v0, circ.n, t);
        const RelStateSpherical s{v[0], v[1] / circ.a, v[2] / circ.a, v[3], v[4] / circ.a, v[5] / circ.a};
        return cartesian_from_spherical(s, snapshot_at(t));
      };
    }

    case ModelId::ya_rect: {
      const NondimCartesian n0 = nondim_from_dimensional(x0, snap0);
      return [n0, snap0, snapshot_at, x0, ctx](double t) {
        if (t == 0.0) return x0;
        const ChiefSnapshot snap = snapshot_at(t);
        const double J = j_from_time(t, ctx.mu, snap0.p);
        return dimensional_from_nondim(ya_propagate(n0, snap0.e, snap0.f, snap.f, J), snap);
      };
    }

    case ModelId::ya_curv: {
      const NondimSpherical n0 = nondim_from_dimensional(spherical_from_cartesian(x0, snap0), snap0);
      return [n0, snap0, snapshot_at, x0, ctx](double t) {
        if (t == 0.0) return x0;
        const ChiefSnapshot snap = snapshot_at(t);
        const double J = j_from_time(t, ctx.mu, snap0.p);
        const NondimSpherical x = ya_propagate(n0, snap0.e, snap0.f, snap.f, J);
        return cartesian_from_spherical(dimensional_from_nondim(x, snap), snap);
      };
    }

    case ModelId::qv_curv_circular: {
      const RelStateSpherical s0 = spherical_from_cartesian(x0, snap0);
      const NondimSpherical n0{s0.rho / circ.a,         s0.theta,           s0.phi,
                               s0.rhodot / (circ.a * circ.n), s0.thetadot / circ.n, s0.phidot / circ.n};
      return [n0, circ, snapshot_at, x0](double t) {
        if (t == 0.0) return x0;
        const NondimSpherical x = propagate_circular_qv(n0, circ.n, t);
        const RelStateSpherical s{circ.a * x.rho,          x.theta,           x.phi,
                                  circ.a * circ.n * x.drho, circ.n * x.dtheta, circ.n * x.dphi};
        return cartesian_from_spherical(s, snapshot_at(t));
      };
    }

    case ModelId::second_order_curv:
      return [x0, chief, ctx](double t) { return propagate_second_order_dimensional(x0, chief, t, ctx); };

    case ModelId::roe_order1:
    case ModelId::roe_order2: {
      const ROEVector roe0 = roe_from_elements(sc.chief, sc.deputy);
      const int order = model == ModelId::roe_order1 ? 1 : 2;
      return [roe0, order, chief, circ, ctx, x0](double t) {
        if (t == 0.0) return x0;
        const ROEVector roe = propagate_dlambda(roe0, circ.n, t, order);
        return roe_to_relative_state_exact(propagate_elements(chief, t, ctx), roe, ctx);
      };
    }
  }
  throw DomainError("make_propagator: unhandled model");
}

namespace {

std::vector<Eigen::Vector3d> truth_positions(const Scenario& sc) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(sc.times.size());
  for (double t : sc.times) {
    out.push_back(position(truth_relative_state(propagate_elements(sc.chief, t, sc.ctx),
                                                propagate_elements(sc.deputy, t, sc.ctx), sc.ctx)));
  }
  return out;
}

ErrorRecord max_error_against(ModelId model, const Scenario& sc, const std::vector<Eigen::Vector3d>& truth) {
  const Propagator prop = make_propagator(model, sc);
  ErrorRecord rec;
  rec.model = model;
  rec.e = sc.chief.e;
  for (std::size_t j = 0; j < sc.times.size(); ++j) {
    const double t = sc.times[j];
    double err = 0.0;
    try {
      err = (position(prop(t)) - truth[j]).norm();
    } catch (const std::exception& ex) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "model " << to_string(model) << " failed at t = " << t << " s: " << ex.what();
      throw NumericalError(msg.str());
    }
    if (!std::isfinite(err)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "model " << to_string(model) << " produced a non-finite state at t = " << t << " s";
      throw NumericalError(msg.str());
    }
    if (err > rec.max_err_km) {
      rec.max_err_km = err;
      rec.t_max_s = t;
    }
  }
  return rec;
}

using ConfigMutator = std::function<void(ScenarioConfig&, double)>;

std::vector<ErrorRecord> run_sweep(const ScenarioConfig& base, std::span<const double> values,
                                   std::span<const ModelId> models, std::string_view param,
                                   const ConfigMutator& mutate) {
  std::vector<std::future<std::vector<ErrorRecord>>> jobs;
  jobs.reserve(values.size());
  const std::vector<ModelId> model_list(models.begin(), models.end());
  for (double v : values) {
    jobs.push_back(std::async(std::launch::async, [&base, &mutate, model_list, param, v] {
      ScenarioConfig cfg = base;
      mutate(cfg, v);
      const Scenario sc = build_scenario(cfg);
      const std::vector<Eigen::Vector3d> truth = truth_positions(sc);
      std::vector<ErrorRecord> recs;
      for (ModelId m : model_list) {
        ErrorRecord r = max_error_against(m, sc, truth);
        r.scenario_id = cfg.scenario_id;
        r.sweep_param_name = std::string(param);
        r.sweep_value = v;
        r.adlambda_km = cfg.roe_km[1];
        recs.push_back(std::move(r));
      }
      return recs;
    }));
  }
  std::vector<ErrorRecord> out;
  for (auto& job : jobs) {
    auto recs = job.get();
    out.insert(out.end(), recs.begin(), recs.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const ErrorRecord& a, const ErrorRecord& b) {
    if (a.model != b.model) return a.model < b.model;
    return a.sweep_value < b.sweep_value;
  });
  return out;
}

}  // namespace

ErrorRecord max_position_error(ModelId model, const Scenario& scenario) {
  return max_error_against(model, scenario, truth_positions(scenario));
}

std::vector<SeriesSample> propagate_series(ModelId model, const Scenario& sc) {
  const Propagator prop = make_propagator(model, sc);
  std::vector<SeriesSample> out;
  out.reserve(sc.times.size());
  for (double t : sc.times) {
    SeriesSample s;
    s.t = t;
    s.model = prop(t);
    s.truth = truth_relative_state(propagate_elements(sc.chief, t, sc.ctx), propagate_elements(sc.deputy, t, sc.ctx),
                                   sc.ctx);
    s.err_km = (position(s.model) - position(s.truth)).norm();
    out.push_back(s);
  }
  return out;
}

std::vector<ErrorRecord> sweep_eccentricity(const ScenarioConfig& base, std::span<const double> eccentricities,
                                            std::span<const ModelId> models) {
  return run_sweep(base, eccentricities, models, "e", [](ScenarioConfig& c, double v) { c.e = v; });
}

std::vector<ErrorRecord> sweep_separation(const ScenarioConfig& base, std::span<const double> adlambda_km,
                                          std::span<const ModelId> models) {
  return run_sweep(base, adlambda_km, models, "adlambda_km", [](ScenarioConfig& c, double v) { c.roe_km[1] = v; });
}

std::vector<ErrorRecord> sweep_delta_a(const ScenarioConfig& base, std::span<const double> ada_km,
                                       std::span<const ModelId> models) {
  return run_sweep(base, ada_km, models, "ada_km", [](ScenarioConfig& c, double v) { c.roe_km[0] = v; });
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > 0.0) || count < 1) throw ConfigError("log_spaced needs positive bounds and count >= 1");
  std::vector<double> out;
  if (count == 1) return {lo};
  const double a = std::log10(lo), b = std::log10(hi);
  for (int j = 0; j < count; ++j) out.push_back(std::pow(10.0, a + (b - a) * j / (count - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace relmo
