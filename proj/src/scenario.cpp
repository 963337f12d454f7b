#include "kinetic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "kinetic/collision.hpp"
#include "kinetic/conserve.hpp"
#include "kinetic/error.hpp"
#include "kinetic/kernel.hpp"
#include "kinetic/reference.hpp"
#include "kinetic/sources.hpp"
#include "kinetic/stepper.hpp"

namespace kinetic {

namespace {

constexpr double kPi = std::numbers::pi;

double maxwellian(const Vec3& v, const Vec3& c, double T) {
  const double dx = v[0] - c[0], dy = v[1] - c[1], dz = v[2] - c[2];
  return std::exp(-(dx * dx + dy * dy + dz * dz) / (2.0 * T)) / std::pow(2.0 * kPi * T, 1.5);
}

bool is_bimodal(Scenario s) {
  return s == Scenario::kMaxwellElastic || s == Scenario::kHardSphereElastic || s == Scenario::kInelastic;
}

bool is_slowdown(Scenario s) { return s == Scenario::kSlowdownConstT || s == Scenario::kSlowdownDecayingT; }

// Two Maxwellians of temperature s/2 centered at sqrt(s) (-1, 1, 0) and
// sqrt(s) (1, 0, 0): the thermostat temperature sets the velocity scale.
std::pair<Vec3, Vec3> slowdown_centers(double s) {
  const double r = std::sqrt(s);
  return {Vec3{-r, r, 0.0}, Vec3{r, 0.0, 0.0}};
}

}  // namespace

Density initial_density(const ScenarioConfig& c) {
  switch (c.scenario) {
    case Scenario::kMaxwellElastic:
    case Scenario::kHardSphereElastic:
    case Scenario::kInelastic:
      return [](const Vec3& v) {
        return 0.5 * maxwellian(v, {-2.0, 2.0, 0.0}, 1.0) + 0.5 * maxwellian(v, {2.0, 0.0, 0.0}, 1.0);
      };
    case Scenario::kBkw: {
      const double t = c.start_time(), eta = std::sqrt(c.init_T);
      return [t, eta](const Vec3& v) { return bkw_exact(v, t, eta); };
    }
    case Scenario::kInelasticDiffusion: {
      const double T = c.init_T;
      return [T](const Vec3& v) { return maxwellian(v, {0.0, 0.0, 0.0}, T); };
    }
    case Scenario::kSlowdownConstT:
    case Scenario::kSlowdownDecayingT: {
      const double s = c.source.schedule.T0;
      const auto [a, b] = slowdown_centers(s);
      return [a, b, s](const Vec3& v) { return 0.5 * maxwellian(v, a, 0.5 * s) + 0.5 * maxwellian(v, b, 0.5 * s); };
    }
  }
  throw ValidationError("unknown scenario");
}

std::vector<ScaleHint> scale_hints(const ScenarioConfig& c) {
  std::vector<ScaleHint> hints;
  if (is_bimodal(c.scenario)) {
    hints.push_back({{-2.0, 2.0, 0.0}, 1.0, 0});
    hints.push_back({{2.0, 0.0, 0.0}, 1.0, 0});
    hints.push_back({{0.0, 1.0, 0.0}, 8.0 / 3.0, 1});
    if (c.kernel.e < 1.0) {
      // Inelastic cooling: the coldest state is the one at t_final, estimated
      // with the Maxwell-molecule energy rate.
      const double beta = c.kernel.beta();
      const double rate = beta * (1.0 - beta) * 4.0 * kPi * c.kernel.C * c.source.zeta_prefactor;
      hints.push_back({{0.0, 1.0, 0.0}, 8.0 / 3.0 * std::exp(-rate * (c.t_final - c.start_time())), 2});
    }
  } else if (c.scenario == Scenario::kBkw) {
    const double K = 1.0 - std::exp(-c.start_time() / 6.0);
    hints.push_back({{}, K * c.init_T, 0});
    hints.push_back({{}, c.init_T, 1});
  } else if (c.scenario == Scenario::kInelasticDiffusion) {
    hints.push_back({{}, c.init_T, 0});
    const double limit = diffusion_temperature_limit(c.source.mu_diff, c.source.zeta_prefactor, c.kernel.C, c.kernel.e);
    // The heated steady state has overpopulated tails; widen its hint.
    if (std::isfinite(limit) && limit > 0.0) hints.push_back({{}, 2.0 * limit, 1});
  } else if (is_slowdown(c.scenario)) {
    const double s = c.source.schedule.T0;
    const auto [a, b] = slowdown_centers(s);
    hints.push_back({a, 0.5 * s, 0});
    hints.push_back({b, 0.5 * s, 0});
    hints.push_back({{}, s, 1});
  }
  return hints;
}

double balanced_half_width(int n, const std::vector<ScaleHint>& hints, double truncation) {
  if (hints.empty()) throw ValidationError("no scale hints");
  double t_min = hints.front().temperature, c_max = 0.0;
  for (const auto& h : hints) {
    if (!(h.temperature > 0.0)) throw ValidationError("scale hint temperatures must be positive");
    t_min = std::min(t_min, h.temperature);
    for (double x : h.center) c_max = std::max(c_max, std::abs(x));
  }
  auto inf_norm = [](const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
  };
  const double reach = 2.0 - truncation;
  auto edge = [&](double L) {
    double best = INFINITY;
    for (const auto& h : hints) {
      const double gap = std::max(L - inf_norm(h.center, Vec3{}), 0.0);
      best = std::min(best, gap * gap / (2.0 * h.temperature));
      if (reach <= 0.0) continue;
      for (const auto& k : hints) {
        if (k.state != h.state) continue;
        const double g2 = std::max(reach * L - inf_norm(h.center, k.center), 0.0);
        best = std::min(best, g2 * g2 / (2.0 * (h.temperature + k.temperature)));
      }
    }
    return best;
  };
  auto spectral = [&](double L) {
    const double cut = n * kPi / (2.0 * L);
    return 0.5 * t_min * cut * cut;
  };
  // edge - spectral increases with L.
  double lo = 1e-12, hi = std::max(2.0 * c_max, 1.0);
  while (edge(hi) < spectral(hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (edge(mid) < spectral(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double default_time_step(const KernelSpec& kernel, double rho, double temperature) {
  const double nu = rho * 4.0 * kPi * kernel.C * std::pow(std::sqrt(6.0 * temperature), kernel.lambda);
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("cannot derive a time step from the initial state");
  return 0.1 / nu;
}

TimeGrid make_time_grid(double t_start, double t_final, double dt) {
  if (!(dt > 0.0)) throw ValidationError("time.dt must be positive");
  TimeGrid g;
  g.t_start = t_start;
  const double span = t_final - t_start;
  if (span <= 0.0) {
    g.dt = dt;
    return g;
  }
  g.steps = std::max(1, int(std::lround(span / dt)));
  g.dt = span / g.steps;
  return g;
}

const std::vector<double>& rescaled_moment_orders() {
  static const std::vector<double> q = {1.0, 1.3, 1.45, 1.5, 1.55, 1.7, 2.0};
  return q;
}

RunResult run_scenario(const ScenarioConfig& config, const Progress& progress) {
  validate(config);
  RunResult result;
  result.config = config;
  set_collision_workers(config.workers);

  const double L = config.L ? *config.L : balanced_half_width(config.N, scale_hints(config), config.kernel.truncation);
  result.grid = build_grids(config.N, L);
  result.weights = quadrature_weights(result.grid.velocity, config.weights);
  VelocityField f = sample(result.grid, initial_density(config));

  const double t0 = config.start_time();
  const MomentSet m0 = compute_moments(f, result.weights, t0);
  if (!m0.valid) throw NumericalError("initial datum has no mass on the grid");
  const double dt = config.dt ? *config.dt : default_time_step(config.kernel, m0.rho, m0.T);
  result.time = make_time_grid(t0, config.t_final, dt);

  const KernelCache collision = KernelCache::build(config.kernel, result.grid, config.table_resolution, config.table);
  std::optional<KernelCache> linear;
  if (config.source.kind == SourceSpec::Kind::kThermostat &&
      !(config.kernel.lambda == 0.0 && config.kernel.e == 1.0)) {
    KernelSpec maxwell;
    maxwell.C = config.kernel.C;
    linear = KernelCache::build(maxwell, result.grid, config.table_resolution, config.table);
  }
  const RightHandSide rhs_impl(collision, config.source, linear);
  const Rhs rhs = [&rhs_impl](const VelocityField& x, double t) { return rhs_impl(x, t); };

  std::optional<ConstraintSystem> sys;
  if (config.conserve != ConservationMode::kNone) sys = constraints_from_state(result.weights, config.conserve, f);
  const ConstraintSystem* sys_ptr = sys ? &*sys : nullptr;

  // Snapshot requests rounded to the nearest step.
  std::vector<double> requested = config.snapshot_times;
  if (requested.empty()) requested = {t0, config.t_final};
  std::map<int, bool> snapshot_steps;
  for (double ts : requested) {
    const int s = result.time.steps == 0 ? 0 : int(std::lround((ts - t0) / result.time.dt));
    snapshot_steps[std::clamp(s, 0, result.time.steps)] = true;
  }

  const bool track_mq = config.scenario == Scenario::kSlowdownDecayingT;
  auto record = [&](const VelocityField& x, double t, const StepInfo& info) {
    MomentSet m = compute_moments(x, result.weights, t);
    m.corr_norm = info.corr_norm;
    result.series.push_back(m);
    if (track_mq) {
      std::vector<double> row;
      for (double q : rescaled_moment_orders()) row.push_back(rescaled_moment(x, result.weights, q, t));
      result.mq.push_back(std::move(row));
    }
  };

  StepInfo info;
  record(f, t0, info);
  if (snapshot_steps.count(0)) result.snapshots.push_back({t0, f});
  double last_recorded_t = t0;

  for (int n = 0; n < result.time.steps; ++n) {
    const double t = t0 + n * result.time.dt;
    VelocityField next;
    try {
      next = step(config.integrator, f, t, result.time.dt, rhs, sys_ptr, &info);
    } catch (const NumericalError& err) {
      result.error = err.what();
      break;
    }
    // The stage-one right-hand side belongs to the state at time t.
    if (!result.series.empty() && result.series.back().t == t) {
      result.series.back().stationarity_norm = info.stationarity_norm;
    }
    f = std::move(next);
    const int done = n + 1;
    const double t_now = done == result.time.steps ? config.t_final : t0 + done * result.time.dt;
    if (done % config.record_stride == 0 || done == result.time.steps) {
      record(f, t_now, info);
      last_recorded_t = t_now;
    }
    if (snapshot_steps.count(done)) result.snapshots.push_back({t_now, f});
    if (progress) progress(done, result.time.steps, t_now);
  }

  if (!result.error && !result.series.empty() && result.series.back().t == last_recorded_t) {
    try {
      const VelocityField q = rhs(f, last_recorded_t);
      result.series.back().stationarity_norm = sys_ptr ? tangent(*sys_ptr, q).max_abs() : q.max_abs();
    } catch (const NumericalError& err) {
      result.error = err.what();
    }
  }
  result.final_state = std::move(f);
  return result;
}

}  // namespace kinetic
