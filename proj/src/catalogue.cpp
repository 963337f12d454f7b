#include "kinetic/catalogue.hpp"

#include <algorithm>
#include <cmath>

#include "kinetic/error.hpp"
#include "kinetic/report.hpp"

namespace kinetic {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Largest error on the x-slice of the last snapshot, relative to the peak of
// the exact profile, over points where the exact profile is at least
// `floor` times its peak.
double terminal_slice_error(const ScenarioConfig& c, const RunResult& r, double floor) {
  if (r.snapshots.empty()) throw NumericalError("no snapshot recorded");
  const Snapshot& snap = r.snapshots.back();
  const auto slice = axis_slice(snap.f, Axis::kX);
  std::vector<double> exact;
  double peak = 0.0;
  for (const auto& [v, fv] : slice) {
    exact.push_back(slice_reference(c, Vec3{v, 0.0, 0.0}, snap.t));
    peak = std::max(peak, exact.back());
  }
  double err = 0.0;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    if (exact[i] >= floor * peak) err = std::max(err, std::abs(slice[i].second - exact[i]));
  }
  return err / peak;
}

}  // namespace

Tier parse_tier(const std::string& name) {
  if (name == "smoke") return Tier::kSmoke;
  if (name == "full") return Tier::kFull;
  throw ValidationError("--tier must be smoke or full, got '" + name + "'");
}

std::vector<CatalogueEntry> catalogue(Tier tier) {
  const bool full = tier == Tier::kFull;
  const int n = full ? 24 : 16;
  std::vector<CatalogueEntry> out;
  auto add = [&](Scenario s, Binding b, std::string ref, double tol, auto&& tweak) {
    ScenarioConfig c = default_config(s);
    c.N = n;
    c.output_dir = "bench/" + to_string(s);
    tweak(c);
    validate(c);
    out.push_back({to_string(s), c, b, std::move(ref), tol});
  };
  auto none = [](ScenarioConfig&) {};

  add(Scenario::kMaxwellElastic, Binding::kMomentClosedForm, "maxwell_second_moment_exact", full ? 0.05 : 0.10, none);
  add(Scenario::kBkw, Binding::kSliceClosedForm, "bkw_exact", full ? 0.02 : 0.10, [&](ScenarioConfig& c) {
    if (full) c.N = 32;
  });
  add(Scenario::kHardSphereElastic, Binding::kTemperatureInvariant, "temperature invariant", 1e-8, none);
  add(Scenario::kInelastic, Binding::kMomentClosedForm, "inelastic_energy_exact", 0.02, none);
  add(Scenario::kInelasticDiffusion, Binding::kMomentClosedForm, "diffusion_temperature_exact", 0.03, none);
  add(Scenario::kSlowdownConstT, Binding::kSliceClosedForm, "self_similar_F", 0.05, none);
  add(Scenario::kSlowdownDecayingT, Binding::kTailThreshold, "rescaled moments split at q = 1.5", 3.0,
      [&](ScenarioConfig& c) { c.N = full ? 26 : 22; });
  return out;
}

BenchOutcome evaluate(const CatalogueEntry& entry, const RunResult& r) {
  BenchOutcome o;
  if (r.error) {
    o.detail = "numerical abort: " + *r.error;
    return o;
  }
  switch (entry.binding) {
    case Binding::kMomentClosedForm: {
      double worst = 0.0;
      std::string where;
      for (const auto& m : r.series) {
        const auto row = moments_row(m);
        for (const auto& [name, exact] : moment_reference(entry.config, m.t)) {
          const auto& h = moments_header();
          const auto col = std::size_t(std::find(h.begin(), h.end(), name) - h.begin());
          // Relative to the size of the quantity over the run.
          double scale = 0.0;
          for (const auto& m2 : r.series)
            for (const auto& [n2, e2] : moment_reference(entry.config, m2.t))
              if (n2 == name) scale = std::max(scale, std::abs(e2));
          const double rel = std::abs(row[col] - exact) / scale;
          if (rel > worst) {
            worst = rel;
            where = name + " at t = " + fmt(m.t);
          }
        }
      }
      o.metric = worst;
      o.passed = worst <= entry.tolerance;
      o.detail = "max relative error " + fmt(worst) + " (" + where + ")";
      break;
    }
    case Binding::kSliceClosedForm: {
      const double floor = entry.config.scenario == Scenario::kBkw ? 0.0 : 1e-3;
      o.metric = terminal_slice_error(entry.config, r, floor);
      o.passed = o.metric <= entry.tolerance;
      o.detail = "terminal slice error " + fmt(o.metric);
      break;
    }
    case Binding::kTemperatureInvariant: {
      double drift = 0.0;
      for (const auto& m : r.series) drift = std::max(drift, std::abs(m.T - r.series.front().T));
      o.metric = drift;
      o.passed = drift <= entry.tolerance;
      o.detail = "temperature drift " + fmt(drift);
      break;
    }
    case Binding::kTailThreshold: {
      const auto& q = rescaled_moment_orders();
      bool positive = true;
      for (const auto& row : r.mq)
        for (double x : row) positive = positive && x > 0.0;
      bool ok = positive;
      std::string text;
      for (std::size_t k = 0; k < q.size(); ++k) {
        const double ratio = r.mq.back()[k] / r.mq.front()[k];
        text += " q=" + fmt(q[k]) + ":" + fmt(ratio);
        if (q[k] < 1.5) ok = ok && ratio <= entry.tolerance;
        if (q[k] > 1.6) ok = ok && ratio >= entry.tolerance;
      }
      o.passed = ok;
      o.detail = std::string(positive ? "" : "non-positive m_q;") + " final/initial" + text;
      break;
    }
  }
  return o;
}

}  // namespace kinetic
