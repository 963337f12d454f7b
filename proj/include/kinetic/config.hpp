#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kinetic/conserve.hpp"
#include "kinetic/grid.hpp"
#include "kinetic/kernel.hpp"
#include "kinetic/sources.hpp"
#include "kinetic/stepper.hpp"

namespace kinetic {

enum class Scenario {
  kMaxwellElastic,
  kBkw,
  kHardSphereElastic,
  kInelastic,
  kInelasticDiffusion,
  kSlowdownConstT,
  kSlowdownDecayingT,
};

Scenario parse_scenario(const std::string& name);
std::string to_string(Scenario scenario);
const std::vector<Scenario>& all_scenarios();

struct ScenarioConfig {
  Scenario scenario = Scenario::kMaxwellElastic;

  int N = 16;
  std::optional<double> L;  // default: balanced tail/spectral decay rule
  WeightRule weights = WeightRule::kPeriodicTrapezoid;

  KernelSpec kernel;
  TableMode table = TableMode::kAuto;
  int table_resolution = 256;

  SourceSpec source;
  ConservationMode conserve = ConservationMode::kElastic;

  // Temperature of the initial datum where the scenario leaves it free
  // (BKW: eta^2; inelastic-diffusion: the centered Maxwellian).
  double init_T = 1.0;

  std::optional<double> dt;  // default: 0.1 / collision frequency
  std::optional<double> t_start;
  double t_final = 5.0;
  Integrator integrator = Integrator::kRk2;

  std::string output_dir = "out";
  int record_stride = 1;
  std::vector<double> snapshot_times;

  int workers = 1;

  double start_time() const;
};

/// Scenario defaults before any explicit key is applied.
ScenarioConfig default_config(Scenario scenario);

/// Parses flat `key = value` lines (`#` starts a comment). `overrides` are
/// extra `key=value` items applied after the text. Unknown keys, malformed
/// values and inconsistent combinations throw ValidationError.
ScenarioConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});
ScenarioConfig parse_config_file(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

void validate(const ScenarioConfig& config);

/// Every key with its resolved value, one `key = value` line each; parses
/// back to the same configuration.
std::string format_config(const ScenarioConfig& config);

}  // namespace kinetic
