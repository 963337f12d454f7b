#include "kinetic/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "kinetic/error.hpp"
#include "kinetic/reference.hpp"

namespace kinetic {

namespace {

double cell_value(const CsvTable& t, std::size_t row, int col) {
  try {
    return parse_double(t.rows[row][std::size_t(col)]);
  } catch (const ValidationError&) {
    throw ValidationError("column " + t.header[std::size_t(col)] + ", row " + std::to_string(row + 1) +
                          ": not a number");
  }
}

std::string slice_name(double t) { return format_double(t) + ".csv"; }

}  // namespace

const std::vector<std::string>& moments_header() {
  static const std::vector<std::string> h = {"t",  "rho", "mx",  "my",  "mz",  "Vx", "Vy", "Vz",
                                             "M11", "M12", "M13", "M22", "M23", "M33", "r1", "r2",
                                             "r3", "E",   "T",   "min_f", "corr_norm", "stationarity_norm"};
  return h;
}

std::vector<double> moments_row(const MomentSet& m) {
  return {m.t,       m.rho,     m.m[0],    m.m[1],    m.m[2],    m.V[0],  m.V[1], m.V[2],
          m.M[0][0], m.M[0][1], m.M[0][2], m.M[1][1], m.M[1][2], m.M[2][2], m.r[0], m.r[1],
          m.r[2],    m.E,       m.T,       m.min_f,   m.corr_norm, m.stationarity_norm};
}

std::vector<std::pair<std::string, double>> moment_reference(const ScenarioConfig& c, double t) {
  // The closed forms hold for Maxwell molecules started from the scenario's own datum.
  if (c.kernel.lambda != 0.0) return {};
  switch (c.scenario) {
    case Scenario::kMaxwellElastic: {
      const SecondMoments s = maxwell_second_moment_exact(t);
      return {{"M11", s.M[0][0]}, {"M12", s.M[0][1]}, {"M22", s.M[1][1]}, {"M33", s.M[2][2]},
              {"r1", s.r[0]},     {"r2", s.r[1]},     {"T", 8.0 / 3.0}};
    }
    case Scenario::kInelastic: {
      // Momentum is conserved, so the internal energy is K - |V|^2 / 2.
      const Vec3 V{0.0, 1.0, 0.0};
      const double K = inelastic_energy_exact(t, c.kernel.beta(), 4.5, V);
      const double E = K - 0.5;
      return {{"E", E}, {"T", 2.0 * E / 3.0}};
    }
    case Scenario::kInelasticDiffusion:
      return {{"T", diffusion_temperature_exact(t, c.source.mu_diff, c.source.zeta_prefactor, c.kernel.C, c.kernel.e,
                                                c.init_T)}};
    default:
      return {};
  }
}

bool has_slice_reference(const ScenarioConfig& c) {
  return c.scenario == Scenario::kBkw || c.scenario == Scenario::kSlowdownConstT ||
         c.scenario == Scenario::kSlowdownDecayingT;
}

double slice_reference(const ScenarioConfig& c, const Vec3& v, double t) {
  if (c.scenario == Scenario::kBkw) return bkw_exact(v, t, std::sqrt(c.init_T));
  const double speed = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double T = c.source.schedule.value(t);
  if (T == 0.0 && speed == 0.0) return INFINITY;
  return self_similar_F(speed, T, 1.0, t);
}

void write_outputs(const RunResult& r, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "slices");
  {
    std::ofstream cfg(dir / "config.resolved");
    cfg << format_config(r.config);
    cfg << "# grid.L used = " << format_double(r.grid.velocity.half_width) << '\n';
    cfg << "# time.dt used = " << format_double(r.time.dt) << ", steps = " << r.time.steps << '\n';
  }
  {
    CsvWriter w(dir / "moments.csv", moments_header());
    for (const auto& m : r.series) w.row(moments_row(m));
  }
  const bool sliced_ref = has_slice_reference(r.config);
  for (const auto& snap : r.snapshots) {
    std::vector<std::string> header = {"v", "f"};
    if (sliced_ref) header.push_back("f_exact");
    CsvWriter w(dir / "slices" / slice_name(snap.t), header);
    for (const auto& [v, fv] : axis_slice(snap.f, Axis::kX)) {
      if (sliced_ref) {
        w.row({v, fv, slice_reference(r.config, Vec3{v, 0.0, 0.0}, snap.t)});
      } else {
        w.row({v, fv});
      }
    }
  }
  if (!r.series.empty() && !moment_reference(r.config, r.series.front().t).empty()) {
    const auto first = moment_reference(r.config, r.series.front().t);
    std::vector<std::string> header = {"t"};
    for (const auto& [name, value] : first) header.push_back(name);
    CsvWriter ref(dir / "moments_reference.csv", header);

    std::vector<std::string> report_header = {"t"};
    for (const auto& [name, value] : first) {
      for (const char* suffix : {"_computed", "_exact", "_abs_err", "_rel_err"}) report_header.push_back(name + suffix);
    }
    CsvWriter rep(dir / "report.csv", report_header);
    // Relative errors use the equilibrium (or initial) size of each quantity.
    std::vector<double> scale;
    const auto last = moment_reference(r.config, r.series.back().t);
    for (std::size_t k = 0; k < first.size(); ++k) {
      scale.push_back(std::max({std::abs(first[k].second), std::abs(last[k].second), 1e-300}));
    }
    if (r.config.scenario == Scenario::kMaxwellElastic) {
      for (std::size_t k = 0; k < first.size(); ++k) {
        if (first[k].first[0] == 'M') scale[k] = 11.0 / 3.0;
        if (first[k].first[0] == 'r') scale[k] = 43.0 / 6.0;
      }
    }
    for (const auto& m : r.series) {
      const auto exact = moment_reference(r.config, m.t);
      const auto row = moments_row(m);
      std::vector<double> ref_row = {m.t}, rep_row = {m.t};
      for (std::size_t k = 0; k < exact.size(); ++k) {
        const auto& names = moments_header();
        const auto col = std::size_t(std::find(names.begin(), names.end(), exact[k].first) - names.begin());
        const double err = std::abs(row[col] - exact[k].second);
        ref_row.push_back(exact[k].second);
        rep_row.insert(rep_row.end(), {row[col], exact[k].second, err, err / scale[k]});
      }
      ref.row(ref_row);
      rep.row(rep_row);
    }
  } else if (sliced_ref) {
    CsvWriter rep(dir / "report.csv", {"t", "v", "f_computed", "f_exact", "abs_err", "rel_err"});
    for (const auto& snap : r.snapshots) {
      const auto slice = axis_slice(snap.f, Axis::kX);
      std::vector<double> exact;
      double peak = 0.0;
      for (const auto& [v, fv] : slice) {
        exact.push_back(slice_reference(r.config, Vec3{v, 0.0, 0.0}, snap.t));
        if (std::isfinite(exact.back())) peak = std::max(peak, std::abs(exact.back()));
      }
      for (std::size_t i = 0; i < slice.size(); ++i) {
        const double err = std::abs(slice[i].second - exact[i]);
        rep.row({snap.t, slice[i].first, slice[i].second, exact[i], err, peak > 0.0 ? err / peak : err});
      }
    }
  }
  if (!r.mq.empty()) {
    std::vector<std::string> header = {"t"};
    for (double q : rescaled_moment_orders()) header.push_back("m_" + format_double(q));
    CsvWriter w(dir / "mq.csv", header);
    for (std::size_t i = 0; i < r.mq.size(); ++i) {
      std::vector<double> row = {r.series[i].t};
      row.insert(row.end(), r.mq[i].begin(), r.mq[i].end());
      w.row(row);
    }
  }
  if (r.error) {
    std::ofstream err(dir / "error.txt");
    err << *r.error << '\n';
  }
}

bool Comparison::passed() const {
  return std::all_of(columns.begin(), columns.end(), [](const ColumnComparison& c) { return c.passed; });
}

Comparison compare_tables(const CsvTable& computed, const CsvTable& reference, double tolerance) {
  if (!(tolerance >= 0.0)) throw ValidationError("--tol must be non-negative");
  if (computed.header.empty() || reference.header.empty()) throw ValidationError("missing CSV header");
  if (computed.rows.empty() || reference.rows.empty()) throw ValidationError("empty series");
  if (computed.header[0] != reference.header[0]) {
    throw ValidationError("key columns differ: " + computed.header[0] + " vs " + reference.header[0]);
  }
  if (computed.rows.size() != reference.rows.size()) {
    throw ValidationError("mismatched series lengths: " + std::to_string(computed.rows.size()) + " vs " +
                          std::to_string(reference.rows.size()));
  }
  Comparison cmp;
  cmp.key = computed.header[0];
  cmp.rows = computed.rows.size();
  for (std::size_t i = 0; i < cmp.rows; ++i) {
    const double a = cell_value(computed, i, 0), b = cell_value(reference, i, 0);
    if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)})) {
      throw ValidationError("row " + std::to_string(i + 1) + ": key " + cmp.key + " differs");
    }
  }
  for (std::size_t j = 1; j < reference.header.size(); ++j) {
    const int cj = computed.column(reference.header[j]);
    if (cj < 0) continue;
    ColumnComparison col;
    col.column = reference.header[j];
    double scale = 0.0;
    for (std::size_t i = 0; i < cmp.rows; ++i) scale = std::max(scale, std::abs(cell_value(reference, i, int(j))));
    for (std::size_t i = 0; i < cmp.rows; ++i) {
      const double err = std::abs(cell_value(computed, i, cj) - cell_value(reference, i, int(j)));
      const double rel = scale > 0.0 ? err / scale : err;
      col.max_abs = std::max(col.max_abs, err);
      col.max_rel = std::max(col.max_rel, rel);
      if (!(rel <= tolerance)) col.failed_rows.push_back(i + 1);
    }
    col.passed = col.failed_rows.empty();
    cmp.columns.push_back(std::move(col));
  }
  if (cmp.columns.empty()) throw ValidationError("the tables share no columns besides the key");
  return cmp;
}

void print_comparison(std::ostream& out, const Comparison& cmp, double tolerance) {
  out << "column,max_abs_err,max_rel_err,failed_rows,status\n";
  for (const auto& c : cmp.columns) {
    out << c.column << ',' << format_double(c.max_abs) << ',' << format_double(c.max_rel) << ','
        << c.failed_rows.size() << ',' << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& c : cmp.columns) {
    if (c.failed_rows.empty()) continue;
    out << "# " << c.column << " exceeds " << format_double(tolerance) << " at rows";
    const std::size_t shown = std::min<std::size_t>(c.failed_rows.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) out << ' ' << c.failed_rows[i];
    if (shown < c.failed_rows.size()) out << " ...";
    out << '\n';
  }
  out << "# " << cmp.rows << " rows, " << cmp.columns.size() << " columns: " << (cmp.passed() ? "PASS" : "FAIL")
      << '\n';
}

}  // namespace kinetic
