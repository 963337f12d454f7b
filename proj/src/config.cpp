#include "kinetic/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "kinetic/csv.hpp"
#include "kinetic/error.hpp"
#include "kinetic/reference.hpp"

namespace kinetic {

namespace {

struct Entry {
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Entry split_entry(const std::string& item, const std::string& where) {
  const std::size_t eq = item.find('=');
  if (eq == std::string::npos) throw ValidationError(where + ": expected key = value, got '" + item + "'");
  Entry e{trim(item.substr(0, eq)), trim(item.substr(eq + 1))};
  if (e.key.empty()) throw ValidationError(where + ": missing key");
  if (e.value.empty()) throw ValidationError(where + ": missing value for " + e.key);
  return e;
}

double as_double(const Entry& e) {
  try {
    const double x = parse_double(e.value);
    if (!std::isfinite(x)) throw ValidationError("not finite");
    return x;
  } catch (const ValidationError&) {
    throw ValidationError(e.key + ": expected a number, got '" + e.value + "'");
  }
}

int as_int(const Entry& e) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(e.value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != e.value.size() || v < INT32_MIN || v > INT32_MAX) {
    throw ValidationError(e.key + ": expected an integer, got '" + e.value + "'");
  }
  return int(v);
}

std::optional<double> as_optional(const Entry& e) {
  if (e.value == "auto") return std::nullopt;
  return as_double(e);
}

std::vector<double> as_list(const Entry& e) {
  std::vector<double> out;
  if (e.value == "none") return out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(as_double(Entry{e.key, trim(item)}));
  return out;
}

WeightRule parse_weights(const Entry& e) {
  if (e.value == "periodic") return WeightRule::kPeriodicTrapezoid;
  if (e.value == "left-half") return WeightRule::kLeftHalfTrapezoid;
  throw ValidationError(e.key + " must be periodic or left-half, got '" + e.value + "'");
}

std::string weights_name(WeightRule rule) {
  return rule == WeightRule::kPeriodicTrapezoid ? "periodic" : "left-half";
}

TableMode parse_table(const Entry& e) {
  if (e.value == "auto") return TableMode::kAuto;
  if (e.value == "lattice") return TableMode::kLattice;
  if (e.value == "interpolated") return TableMode::kInterpolated;
  if (e.value == "direct") return TableMode::kDirect;
  throw ValidationError(e.key + " must be auto, lattice, interpolated or direct, got '" + e.value + "'");
}

std::string table_name(TableMode mode) {
  switch (mode) {
    case TableMode::kAuto: return "auto";
    case TableMode::kLattice: return "lattice";
    case TableMode::kInterpolated: return "interpolated";
    case TableMode::kDirect: return "direct";
  }
  return "auto";
}

using Setter = std::function<void(ScenarioConfig&, const Entry&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"grid.N", [](ScenarioConfig& c, const Entry& e) { c.N = as_int(e); }},
      {"grid.L", [](ScenarioConfig& c, const Entry& e) { c.L = as_optional(e); }},
      {"grid.weights", [](ScenarioConfig& c, const Entry& e) { c.weights = parse_weights(e); }},
      {"kernel.lambda", [](ScenarioConfig& c, const Entry& e) { c.kernel.lambda = as_double(e); }},
      {"kernel.e", [](ScenarioConfig& c, const Entry& e) { c.kernel.e = as_double(e); }},
      {"kernel.C_lambda", [](ScenarioConfig& c, const Entry& e) { c.kernel.C = as_double(e); }},
      {"kernel.table_resolution", [](ScenarioConfig& c, const Entry& e) { c.table_resolution = as_int(e); }},
      {"kernel.truncation", [](ScenarioConfig& c, const Entry& e) { c.kernel.truncation = as_double(e); }},
      {"kernel.table", [](ScenarioConfig& c, const Entry& e) { c.table = parse_table(e); }},
      {"source.kind", [](ScenarioConfig& c, const Entry& e) { c.source.kind = parse_source_kind(e.value); }},
      {"source.mu_diff", [](ScenarioConfig& c, const Entry& e) { c.source.mu_diff = as_double(e); }},
      {"source.theta", [](ScenarioConfig& c, const Entry& e) { c.source.theta = as_double(e); }},
      {"source.thermostat_T", [](ScenarioConfig& c, const Entry& e) { c.source.schedule.T0 = as_double(e); }},
      {"source.thermostat_alpha",
       [](ScenarioConfig& c, const Entry& e) {
         c.source.schedule.alpha = as_double(e);
         c.source.schedule.kind = c.source.schedule.alpha == 0.0 ? ThermostatSchedule::Kind::kConstant
                                                                 : ThermostatSchedule::Kind::kDecaying;
       }},
      {"source.zeta_prefactor", [](ScenarioConfig& c, const Entry& e) { c.source.zeta_prefactor = as_double(e); }},
      {"conserve.mode", [](ScenarioConfig& c, const Entry& e) { c.conserve = parse_conservation_mode(e.value); }},
      {"init.T", [](ScenarioConfig& c, const Entry& e) { c.init_T = as_double(e); }},
      {"time.dt", [](ScenarioConfig& c, const Entry& e) { c.dt = as_optional(e); }},
      {"time.t_start", [](ScenarioConfig& c, const Entry& e) { c.t_start = as_optional(e); }},
      {"time.t_final", [](ScenarioConfig& c, const Entry& e) { c.t_final = as_double(e); }},
      {"time.integrator", [](ScenarioConfig& c, const Entry& e) { c.integrator = parse_integrator(e.value); }},
      {"output.dir", [](ScenarioConfig& c, const Entry& e) { c.output_dir = e.value; }},
      {"output.record_stride", [](ScenarioConfig& c, const Entry& e) { c.record_stride = as_int(e); }},
      {"output.snapshot_times", [](ScenarioConfig& c, const Entry& e) { c.snapshot_times = as_list(e); }},
      {"run.workers", [](ScenarioConfig& c, const Entry& e) { c.workers = as_int(e); }},
  };
  return table;
}

}  // namespace

Scenario parse_scenario(const std::string& name) {
  for (Scenario s : all_scenarios())
    if (to_string(s) == name) return s;
  throw ValidationError("unknown scenario '" + name + "'");
}

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kMaxwellElastic: return "maxwell-elastic";
    case Scenario::kBkw: return "bkw";
    case Scenario::kHardSphereElastic: return "hard-sphere-elastic";
    case Scenario::kInelastic: return "inelastic";
    case Scenario::kInelasticDiffusion: return "inelastic-diffusion";
    case Scenario::kSlowdownConstT: return "slowdown-const-T";
    case Scenario::kSlowdownDecayingT: return "slowdown-decaying-T";
  }
  return "maxwell-elastic";
}

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> list = {
      Scenario::kMaxwellElastic, Scenario::kBkw,           Scenario::kHardSphereElastic, Scenario::kInelastic,
      Scenario::kInelasticDiffusion, Scenario::kSlowdownConstT, Scenario::kSlowdownDecayingT,
  };
  return list;
}

double ScenarioConfig::start_time() const {
  if (t_start) return *t_start;
  return scenario == Scenario::kBkw ? bkw_start_time() : 0.0;
}

ScenarioConfig default_config(Scenario scenario) {
  ScenarioConfig c;
  c.scenario = scenario;
  switch (scenario) {
    case Scenario::kMaxwellElastic:
      c.t_final = 5.0;
      break;
    case Scenario::kBkw:
      c.dt = 0.01;
      c.t_final = bkw_start_time() + 2.0;
      break;
    case Scenario::kHardSphereElastic:
      c.kernel.lambda = 1.0;
      c.t_final = 5.0;
      break;
    case Scenario::kInelastic:
      c.kernel.e = 0.5;
      c.conserve = ConservationMode::kInelastic;
      c.t_final = 8.0;
      break;
    case Scenario::kInelasticDiffusion:
      c.kernel.e = 0.5;
      c.conserve = ConservationMode::kInelastic;
      c.source.kind = SourceSpec::Kind::kDiffusion;
      // Heat bath balancing the inelastic loss at temperature 1.
      c.source.mu_diff = 0.09375;
      c.init_T = 0.5;
      c.t_final = 40.0;
      break;
    case Scenario::kSlowdownConstT:
      c.conserve = ConservationMode::kLinear;
      c.source.kind = SourceSpec::Kind::kThermostat;
      c.source.theta = 4.0 / 3.0;
      c.source.schedule.T0 = 1.0;
      c.t_final = 10.0;
      break;
    case Scenario::kSlowdownDecayingT:
      c.conserve = ConservationMode::kLinear;
      c.source.kind = SourceSpec::Kind::kThermostat;
      c.source.theta = 4.0 / 3.0;
      c.source.schedule.kind = ThermostatSchedule::Kind::kDecaying;
      c.source.schedule.T0 = 0.25;
      c.source.schedule.alpha = 2.0 / 3.0;
      c.t_final = 2.0;
      break;
  }
  return c;
}

void validate(const ScenarioConfig& c) {
  if (c.N < 4 || c.N % 2 != 0) throw ValidationError("grid.N must be an even integer >= 4, got " + std::to_string(c.N));
  if (c.L && !(*c.L > 0.0)) throw ValidationError("grid.L must be positive");
  c.kernel.validate();
  if (c.table_resolution < 64) throw ValidationError("kernel.table_resolution must be at least 64");
  c.source.validate();
  if (c.conserve == ConservationMode::kElastic && c.kernel.e < 1.0) {
    throw ValidationError(
        "conserve.mode = elastic needs kernel.e = 1: inelastic collisions dissipate energy, so only mass and "
        "momentum are collision invariants (use conserve.mode = inelastic)");
  }
  if (c.source.kind == SourceSpec::Kind::kThermostat && c.conserve != ConservationMode::kLinear &&
      c.conserve != ConservationMode::kNone) {
    throw ValidationError("a thermostat conserves only mass: use conserve.mode = linear or none");
  }
  if (c.source.kind == SourceSpec::Kind::kDiffusion && c.conserve == ConservationMode::kElastic) {
    throw ValidationError("a heat bath changes the energy: use conserve.mode = inelastic, linear or none");
  }
  if (!(c.init_T > 0.0)) throw ValidationError("init.T must be positive");
  if (c.dt && !(*c.dt > 0.0)) throw ValidationError("time.dt must be positive");
  const double t0 = c.start_time();
  if (c.scenario == Scenario::kBkw && t0 < bkw_start_time() - 1e-12) {
    throw ValidationError("time.t_start must be at least 6 ln(5/2) for the BKW scenario");
  }
  if (!(c.t_final >= t0)) throw ValidationError("time.t_final must not precede the start time");
  if (c.record_stride < 1) throw ValidationError("output.record_stride must be at least 1");
  for (double s : c.snapshot_times) {
    if (s < t0 - 1e-12 || s > c.t_final + 1e-12) {
      throw ValidationError("output.snapshot_times entries must lie in [t_start, t_final]");
    }
  }
  if (c.workers < 1) throw ValidationError("run.workers must be at least 1");
  if (c.output_dir.empty()) throw ValidationError("output.dir must not be empty");
}

ScenarioConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  std::vector<Entry> entries;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    Entry e = split_entry(line, "line " + std::to_string(lineno));
    if (!seen.insert(e.key).second) throw ValidationError("line " + std::to_string(lineno) + ": duplicate key " + e.key);
    entries.push_back(std::move(e));
  }
  for (const auto& item : overrides) entries.push_back(split_entry(item, "--set"));

  std::optional<Scenario> scenario;
  for (const auto& e : entries)
    if (e.key == "scenario") scenario = parse_scenario(e.value);
  if (!scenario) throw ValidationError("missing required key 'scenario'");

  ScenarioConfig config = default_config(*scenario);
  for (const auto& e : entries) {
    if (e.key == "scenario") continue;
    const auto it = setters().find(e.key);
    if (it == setters().end()) throw ValidationError("unknown key '" + e.key + "'");
    it->second(config, e);
  }
  validate(config);
  return config;
}

ScenarioConfig parse_config_file(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), overrides);
}

std::string format_config(const ScenarioConfig& c) {
  std::ostringstream out;
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string("auto"); };
  out << "scenario = " << to_string(c.scenario) << '\n';
  out << "grid.N = " << c.N << '\n';
  out << "grid.L = " << opt(c.L) << '\n';
  out << "grid.weights = " << weights_name(c.weights) << '\n';
  out << "kernel.lambda = " << format_double(c.kernel.lambda) << '\n';
  out << "kernel.e = " << format_double(c.kernel.e) << '\n';
  out << "kernel.C_lambda = " << format_double(c.kernel.C) << '\n';
  out << "kernel.truncation = " << format_double(c.kernel.truncation) << '\n';
  out << "kernel.table_resolution = " << c.table_resolution << '\n';
  out << "kernel.table = " << table_name(c.table) << '\n';
  out << "source.kind = " << to_string(c.source.kind) << '\n';
  out << "source.mu_diff = " << format_double(c.source.mu_diff) << '\n';
  out << "source.theta = " << format_double(c.source.theta) << '\n';
  out << "source.thermostat_T = " << format_double(c.source.schedule.T0) << '\n';
  out << "source.thermostat_alpha = "
      << format_double(c.source.schedule.kind == ThermostatSchedule::Kind::kConstant ? 0.0 : c.source.schedule.alpha)
      << '\n';
  out << "source.zeta_prefactor = " << format_double(c.source.zeta_prefactor) << '\n';
  out << "conserve.mode = " << to_string(c.conserve) << '\n';
  out << "init.T = " << format_double(c.init_T) << '\n';
  out << "time.dt = " << opt(c.dt) << '\n';
  out << "time.t_start = " << opt(c.t_start) << '\n';
  out << "time.t_final = " << format_double(c.t_final) << '\n';
  out << "time.integrator = " << to_string(c.integrator) << '\n';
  out << "output.dir = " << c.output_dir << '\n';
  out << "output.record_stride = " << c.record_stride << '\n';
  out << "output.snapshot_times = ";
  if (c.snapshot_times.empty()) out << "none";
  for (std::size_t i = 0; i < c.snapshot_times.size(); ++i) out << (i ? ", " : "") << format_double(c.snapshot_times[i]);
  out << '\n';
  out << "run.workers = " << c.workers << '\n';
  return out.str();
}

}  // namespace kinetic
