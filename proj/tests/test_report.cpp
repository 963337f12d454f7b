#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "kinetic/catalogue.hpp"
#include "kinetic/config.hpp"
#include "kinetic/csv.hpp"
#include "kinetic/error.hpp"
#include "kinetic/reference.hpp"
#include "kinetic/report.hpp"
#include "kinetic/scenario.hpp"

using namespace kinetic;

namespace {

CsvTable table(std::vector<std::string> header, const std::vector<std::vector<double>>& rows) {
  CsvTable t;
  t.header = std::move(header);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (double x : r) cells.push_back(format_double(x));
    t.rows.push_back(cells);
  }
  return t;
}

double lookup(const std::vector<std::pair<std::string, double>>& ref, const std::string& name) {
  for (const auto& [k, v] : ref)
    if (k == name) return v;
  FAIL("missing reference column " << name);
  return 0.0;
}

}  // namespace

TEST_CASE("compare identical and offset tables") {
  const CsvTable a = table({"t", "T", "E"}, {{0, 1, 2}, {1, 1.5, 2.5}});
  const Comparison same = compare_tables(a, a, 0.0);
  CHECK(same.passed());
  CHECK(same.columns.size() == 2);

  const CsvTable b = table({"t", "T", "E"}, {{0, 1.1, 2}, {1, 1.5 * 1.1, 2.5}});
  const Comparison off = compare_tables(b, a, 0.05);
  CHECK_FALSE(off.passed());
  CHECK(off.columns[0].column == "T");
  CHECK(off.columns[0].max_rel == doctest::Approx(0.1));
  CHECK(off.columns[0].failed_rows.size() == 2);
  CHECK(off.columns[1].passed);
  CHECK(compare_tables(b, a, 0.2).passed());

  std::ostringstream out;
  print_comparison(out, off, 0.05);
  CHECK(out.str().find("T,") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("compare rejects malformed inputs") {
  const CsvTable a = table({"t", "T"}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(compare_tables(table({"t", "T"}, {}), a, 0.1), ValidationError);
  CHECK_THROWS_AS(compare_tables(table({"t", "T"}, {{0, 1}}), a, 0.1), ValidationError);
  CHECK_THROWS_AS(compare_tables(table({"s", "T"}, {{0, 1}, {1, 2}}), a, 0.1), ValidationError);
  CHECK_THROWS_AS(compare_tables(table({"t", "T"}, {{0, 1}, {2, 2}}), a, 0.1), ValidationError);
  CHECK_THROWS_AS(compare_tables(table({"t", "X"}, {{0, 1}, {1, 2}}), a, 0.1), ValidationError);
  CHECK_THROWS_AS(compare_tables(a, a, -1.0), ValidationError);
}

TEST_CASE("moment references") {
  const auto maxwell = moment_reference(default_config(Scenario::kMaxwellElastic), 0.0);
  CHECK(lookup(maxwell, "M11") == doctest::Approx(5.0));
  CHECK(lookup(maxwell, "T") == doctest::Approx(8.0 / 3.0));
  const auto inel = moment_reference(default_config(Scenario::kInelastic), 2.0);
  CHECK(lookup(inel, "E") == doctest::Approx(inelastic_energy_exact(2.0, 0.75, 4.5, {0, 1, 0}) - 0.5));
  CHECK(moment_reference(default_config(Scenario::kHardSphereElastic), 1.0).empty());
  CHECK(has_slice_reference(default_config(Scenario::kBkw)));
  CHECK_FALSE(has_slice_reference(default_config(Scenario::kInelastic)));
}

TEST_CASE("a short run writes its outputs") {
  const ScenarioConfig c = parse_config("scenario = maxwell-elastic\n",
                                        {"grid.N=8", "grid.L=6", "time.dt=0.1", "time.t_final=0.3",
                                         "output.snapshot_times=0,0.3"});
  const RunResult r = run_scenario(c);
  REQUIRE_FALSE(r.error.has_value());
  CHECK(r.time.steps == 3);
  CHECK(r.series.size() == 4);
  CHECK(r.snapshots.size() == 2);
  CHECK(r.series.back().t == doctest::Approx(0.3));
  CHECK(r.series.back().rho == doctest::Approx(r.series.front().rho).epsilon(1e-12));

  const auto dir = std::filesystem::temp_directory_path() / "kinetic_test_run";
  std::filesystem::remove_all(dir);
  write_outputs(r, dir);
  for (const char* name : {"config.resolved", "moments.csv", "moments_reference.csv", "report.csv"})
    CHECK(std::filesystem::exists(dir / name));
  const CsvTable m = read_csv(dir / "moments.csv");
  CHECK(m.header == moments_header());
  CHECK(m.rows.size() == 4);
  const Comparison cmp = compare_tables(m, read_csv(dir / "moments_reference.csv"), 1.0);
  CHECK(cmp.passed());
  CHECK(format_config(parse_config_file(dir / "config.resolved")) == format_config(c));
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalogue") {
  for (Tier tier : {Tier::kSmoke, Tier::kFull}) {
    const auto entries = catalogue(tier);
    CHECK(entries.size() == all_scenarios().size());
    bool bkw = false, inel = false;
    for (const auto& e : entries) {
      CHECK_NOTHROW(validate(e.config));
      CHECK(e.tolerance > 0.0);
      bkw |= e.name == "bkw";
      inel |= e.name == "inelastic";
    }
    CHECK(bkw);
    CHECK(inel);
  }
  CHECK(parse_tier("full") == Tier::kFull);
  CHECK_THROWS_AS(parse_tier("medium"), ValidationError);
}
