// boltz: run scenarios, compare CSV series and execute the benchmark catalogue.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "kinetic/catalogue.hpp"
#include "kinetic/config.hpp"
#include "kinetic/error.hpp"
#include "kinetic/report.hpp"
#include "kinetic/scenario.hpp"

namespace fs = std::filesystem;
using namespace kinetic;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kNumerical = 2;
constexpr int kAcceptance = 3;

kinetic::Progress progress_printer(bool quiet) {
  if (quiet) return {};
  return [](int step, int steps, double t) {
    const int every = std::max(1, steps / 20);
    if (step % every == 0 || step == steps) std::cerr << "  step " << step << "/" << steps << "  t = " << t << '\n';
  };
}

int solve(const std::string& path, const std::vector<std::string>& sets, const std::string& out, bool quiet) {
  std::vector<std::string> overrides = sets;
  if (!out.empty()) overrides.push_back("output.dir=" + out);
  const ScenarioConfig config = parse_config_file(path, overrides);
  const RunResult result = run_scenario(config, progress_printer(quiet));
  write_outputs(result, config.output_dir);
  if (result.error) {
    std::cerr << "numerical abort: " << *result.error << " (last valid state written to " << config.output_dir
              << ")\n";
    return kNumerical;
  }
  std::cout << "wrote " << config.output_dir << " (" << result.series.size() << " records, "
            << result.snapshots.size() << " snapshots)\n";
  return kOk;
}

int compare(const std::string& computed, const std::string& reference, double tol) {
  const Comparison cmp = compare_tables(read_csv(computed), read_csv(reference), tol);
  print_comparison(std::cout, cmp, tol);
  return cmp.passed() ? kOk : kAcceptance;
}

int bench(const std::string& tier_name, const std::string& only, const std::string& root, bool quiet) {
  const Tier tier = parse_tier(tier_name);
  bool any = false, all_passed = true;
  for (auto entry : catalogue(tier)) {
    if (!only.empty() && entry.name != only) continue;
    any = true;
    entry.config.output_dir = (fs::path(root) / entry.name).string();
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = run_scenario(entry.config, progress_printer(quiet));
    write_outputs(result, entry.config.output_dir);
    const BenchOutcome o = evaluate(entry, result);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << entry.name << " N=" << entry.config.N << " [" << entry.reference
              << ", tol " << entry.tolerance << "] " << o.detail << " (" << secs << " s)\n";
    all_passed = all_passed && o.passed;
  }
  if (!any) throw ValidationError("no catalogue entry named '" + only + "'");
  return all_passed ? kOk : kAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-Lagrangian solver for the space-homogeneous Boltzmann equation"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::vector<std::string> sets;
  bool quiet = false;
  auto* solve_cmd = app.add_subcommand("solve", "Run one scenario from a config file");
  solve_cmd->add_option("config", config_path, "key = value config file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--set", sets, "Override a key, e.g. --set grid.N=24")->allow_extra_args(false);
  solve_cmd->add_option("--out", out_dir, "Output directory (overrides output.dir)");
  solve_cmd->add_flag("--quiet", quiet, "No progress output");

  std::string computed, reference;
  double tol = 0.0;
  auto* compare_cmd = app.add_subcommand("compare", "Compare shared columns of two CSV series");
  compare_cmd->add_option("computed", computed)->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("reference", reference)->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--tol", tol, "Relative tolerance (against the column's largest |reference|)")->required();

  std::string tier = "smoke", only, bench_out = "bench";
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark catalogue");
  bench_cmd->require_subcommand(1);
  auto* run_cmd = bench_cmd->add_subcommand("run", "Run catalogue entries and judge them");
  run_cmd->add_option("--tier", tier, "smoke (N=16) or full (N=24/32)");
  run_cmd->add_option("--only", only, "Run a single entry");
  run_cmd->add_option("--out", bench_out, "Root directory for outputs");
  run_cmd->add_flag("--quiet", quiet, "No progress output");
  auto* list_cmd = bench_cmd->add_subcommand("list", "List catalogue entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*solve_cmd) return solve(config_path, sets, out_dir, quiet);
    if (*compare_cmd) return compare(computed, reference, tol);
    if (*list_cmd) {
      for (const auto& e : catalogue(parse_tier(tier)))
        std::cout << e.name << "  N=" << e.config.N << "  " << e.reference << "  tol " << e.tolerance << '\n';
      return kOk;
    }
    if (*run_cmd) return bench(tier, only, bench_out, quiet);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
