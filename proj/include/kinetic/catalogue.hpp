#pragma once

#include <string>
#include <vector>

#include "kinetic/config.hpp"
#include "kinetic/scenario.hpp"

namespace kinetic {

enum class Tier { kSmoke, kFull };
Tier parse_tier(const std::string& name);

/// How a benchmark run is judged.
enum class Binding {
  kMomentClosedForm,  // moments.csv against moments_reference.csv (maxwell, inelastic, diffusion)
  kSliceClosedForm,   // terminal x-slice against the exact distribution (bkw, constant thermostat)
  kTemperatureInvariant,  // T constant to 1e-8 (hard spheres, no closed form)
  kTailThreshold,     // rescaled moments split at q = 1.5 (decaying thermostat)
};

struct CatalogueEntry {
  std::string name;
  ScenarioConfig config;
  Binding binding;
  std::string reference;  // reference operation the run is compared with
  double tolerance;
};

/// One entry per benchmark scenario; smoke runs at N = 16, full at N = 24
/// (32 for BKW).
std::vector<CatalogueEntry> catalogue(Tier tier = Tier::kSmoke);

struct BenchOutcome {
  bool passed = false;
  double metric = 0.0;
  std::string detail;
};

/// Judges a finished run against its binding.
BenchOutcome evaluate(const CatalogueEntry& entry, const RunResult& result);

}  // namespace kinetic
