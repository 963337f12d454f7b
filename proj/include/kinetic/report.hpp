#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kinetic/csv.hpp"
#include "kinetic/scenario.hpp"

namespace kinetic {

/// Column order of moments.csv.
const std::vector<std::string>& moments_header();
std::vector<double> moments_row(const MomentSet& m);

/// Closed-form values for the moments.csv columns that have one, keyed by
/// column name; empty when the scenario has no moment reference.
std::vector<std::pair<std::string, double>> moment_reference(const ScenarioConfig& config, double t);

/// Reference distribution on a slice point, if the scenario has one.
bool has_slice_reference(const ScenarioConfig& config);
double slice_reference(const ScenarioConfig& config, const Vec3& v, double t);

/// Writes config.resolved, moments.csv, slices/<t>.csv, and where a
/// reference exists moments_reference.csv and report.csv; mq.csv for the
/// decaying-thermostat slow-down; error.txt after a numerical abort.
void write_outputs(const RunResult& result, const std::filesystem::path& dir);

struct ColumnComparison {
  std::string column;
  double max_abs = 0.0;
  double max_rel = 0.0;  // relative to the largest |reference| in the column
  std::vector<std::size_t> failed_rows;
  bool passed = true;
};

struct Comparison {
  std::string key;
  std::size_t rows = 0;
  std::vector<ColumnComparison> columns;
  bool passed() const;
};

/// Compares every column present in both tables. Both tables must share the
/// first (key) column with matching values row by row.
Comparison compare_tables(const CsvTable& computed, const CsvTable& reference, double tolerance);

/// One machine-readable line per column followed by a summary line.
void print_comparison(std::ostream& out, const Comparison& cmp, double tolerance);

}  // namespace kinetic
