#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kinetic/config.hpp"
#include "kinetic/grid.hpp"
#include "kinetic/observables.hpp"

namespace kinetic {

/// Initial distribution of a scenario in physical velocity variables.
Density initial_density(const ScenarioConfig& config);

/// A Maxwellian component (offset and temperature) the grid has to
/// accommodate. Components with the same `state` belong to one distribution.
struct ScaleHint {
  Vec3 center{};
  double temperature = 1.0;
  int state = 0;
};

/// Offsets and temperatures met during the run: the initial components and
/// the state the scenario relaxes towards.
std::vector<ScaleHint> scale_hints(const ScenarioConfig& config);

/// Half-width L that balances the Gaussian decay exponent at the edge of
/// the computation against the spectral decay at the Fourier cut-off
/// N pi / (2L) of the coldest component, T_min (N pi / (2L))^2 / 2. The
/// edge exponent is the smaller of
///   (L - |c_i|_inf)^2 / (2 T_i)                          (f itself)
///   ((2 - R/L) L - |c_i - c_j|_inf)^2 / (2 (T_i + T_j))  (pair correlation)
/// the second one over component pairs of the same state: images of the
/// 2L-periodic correlation must stay outside the cut-off ball of radius R.
double balanced_half_width(int n, const std::vector<ScaleHint>& hints, double truncation = 1.0);

/// Collision time scale 0.1 / nu with nu = rho 4 pi C (sqrt(6 T))^lambda.
double default_time_step(const KernelSpec& kernel, double rho, double temperature);

struct TimeGrid {
  double t_start = 0.0;
  double dt = 0.0;
  int steps = 0;
};

/// Step count rounded so that t_final is reached exactly.
TimeGrid make_time_grid(double t_start, double t_final, double dt);

struct Snapshot {
  double t = 0.0;
  VelocityField f;
};

const std::vector<double>& rescaled_moment_orders();

struct RunResult {
  ScenarioConfig config;
  DualGrid grid;
  std::vector<double> weights;
  TimeGrid time;
  std::vector<MomentSet> series;
  std::vector<Snapshot> snapshots;
  // Rescaled moments m_q per recorded time (slow-down with decaying
  // thermostat only), columns in rescaled_moment_orders() order.
  std::vector<std::vector<double>> mq;
  VelocityField final_state;
  std::optional<std::string> error;  // numerical abort; outputs hold the last valid state
};

using Progress = std::function<void(int step, int steps, double t)>;

/// Builds grid, caches and constraints, then advances the scenario.
/// Deterministic given the configuration.
RunResult run_scenario(const ScenarioConfig& config, const Progress& progress = {});

}  // namespace kinetic
