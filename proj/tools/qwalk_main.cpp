// qwalk: coined quantum walk transport experiments.
//
//   qwalk run --structure cycle:18 --coin H --steps 180 --classical on
//   qwalk sweep --family all --levels 10,14,20,30,40 --output fits.csv
//   qwalk compare-coins --structure c60 --coins G3,G4,F3,F4,HxH --steps 700
//   qwalk export-graph --structure c60 --output c60.txt --levels c60_levels.csv

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include "qwalk/analysis.hpp"
#include "qwalk/error.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/graph_io.hpp"
#include "qwalk/levels.hpp"

namespace {

constexpr int kExitFailedRuns = 1;
constexpr int kExitBadConfig = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    const long v = qwalk::parse_integer(item, "level count");
    if (v < 2 || v > 100'000) qwalk::throw_invalid("level count out of range: " + item);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

struct RunFlags {
  std::string config_file;
  std::string structure, coin, init, steps, mode, classical, output;
};

int do_run(const RunFlags& flags) {
  qwalk::ExperimentConfig config;
  if (!flags.config_file.empty()) {
    std::ifstream is(flags.config_file);
    if (!is) throw qwalk::Error(qwalk::ErrorKind::kIo, "cannot read config " + flags.config_file);
    for (const auto& [key, value] : qwalk::read_key_values(is)) qwalk::apply_setting(config, key, value);
  }
  const std::pair<const char*, const std::string*> overrides[] = {
      {"structure", &flags.structure}, {"coin", &flags.coin},           {"init", &flags.init},
      {"steps", &flags.steps},         {"mode", &flags.mode},           {"classical", &flags.classical},
      {"output", &flags.output},
  };
  for (const auto& [key, value] : overrides)
    if (!value->empty()) qwalk::apply_setting(config, key, *value);

  const auto report = qwalk::run_experiment(config);
  for (const auto& path : report.written) std::cout << path.string() << '\n';
  for (const auto& f : report.failures) std::cerr << "failed: " << f.what << ": " << f.reason << '\n';
  return report.ok() ? 0 : kExitFailedRuns;
}

struct SweepFlags {
  std::string families = "all";
  std::string levels = "10,14,20,30,40";
  std::string steps = "2000";
  std::string coin;
  std::string output = "fits.csv";
  std::string points;
};

int do_sweep(const SweepFlags& flags) {
  qwalk::SweepConfig config;
  if (flags.families == "all") {
    config.families = qwalk::all_families();
  } else {
    for (const auto& name : split_list(flags.families)) config.families.push_back(qwalk::parse_family(name));
  }
  config.levels = parse_levels(flags.levels);
  if (config.levels.size() < 2) qwalk::throw_invalid("a sweep needs at least 2 level counts");
  config.steps = qwalk::parse_integer(flags.steps, "steps");
  config.coin = flags.coin;

  std::vector<qwalk::SweepResult> results;
  std::vector<std::string> failures;
  for (auto family : config.families) {
    qwalk::SweepConfig one = config;
    one.families = {family};
    try {
      auto r = qwalk::run_sweeps(one);
      for (int lv : r.front().excluded)
        std::cerr << "warning: " << qwalk::to_string(family) << " with " << lv
                  << " levels never reached 50% arrival; excluded from the fit\n";
      results.push_back(std::move(r.front()));
    } catch (const std::exception& e) {
      failures.push_back(std::string(qwalk::to_string(family)) + ": " + e.what());
    }
  }
  qwalk::write_file_atomically(flags.output, [&](std::ostream& os) { qwalk::write_fit_table(os, results); });
  std::cout << flags.output << '\n';
  if (!flags.points.empty()) {
    qwalk::write_file_atomically(flags.points, [&](std::ostream& os) { qwalk::write_sweep_points(os, results); });
    std::cout << flags.points << '\n';
  }
  for (const auto& f : failures) std::cerr << "failed: " << f << '\n';
  return failures.empty() ? 0 : kExitFailedRuns;
}

struct CompareFlags {
  std::string structure = "c60";
  std::string init = "node";
  std::string coins = "G3,G4,F3,F4,HxH";
  std::string steps = "700";
  bool classical = false;
  std::string output;
};

int do_compare(const CompareFlags& flags) {
  const long steps = qwalk::parse_integer(flags.steps, "steps");
  const auto coins = split_list(flags.coins);
  const auto comparison = qwalk::compare_coins(flags.structure, flags.init, coins, steps, flags.classical);
  std::string path = flags.output;
  if (path.empty()) path = qwalk::output_name(flags.structure, "compare", qwalk::EvolutionMode::kAbsorbing);
  qwalk::write_file_atomically(path, [&](std::ostream& os) { qwalk::write_comparison_csv(os, comparison); });
  std::cout << path << '\n';
  return 0;
}

struct ExportFlags {
  std::string structure = "c60";
  std::string init = "node";
  std::string output;
  std::string levels;
};

int do_export(const ExportFlags& flags) {
  const auto g = qwalk::build_structure(flags.structure);
  if (flags.output.empty() || flags.output == "-") {
    qwalk::write_adjacency(std::cout, g);
  } else {
    qwalk::write_file_atomically(flags.output, [&](std::ostream& os) { qwalk::write_adjacency(os, g); });
  }
  if (!flags.levels.empty()) {
    const auto levels = qwalk::compute_levels(g, qwalk::resolve_initial_set(g, flags.init));
    qwalk::write_file_atomically(flags.levels, [&](std::ostream& os) { qwalk::write_levels_csv(os, levels); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walk transport on cycles, C60 and carbon nanotubes"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run one structure with one or more coins and write CSV records");
  run->add_option("--config", run_flags.config_file, "key=value config file (flags override it)");
  run->add_option("--structure", run_flags.structure, "cycle:<n> | c60 | loop-<kind>:<circ>:<repeats> | capped-<kind>:<layers>");
  run->add_option("--coin", run_flags.coin, "Coin name or comma list: H, Hi, G<d>, F<d>, HxH");
  run->add_option("--init", run_flags.init, "node[:<id>] | pentagon-face | hexagon-face | ring | apex-face");
  run->add_option("--steps", run_flags.steps, "Number of steps");
  run->add_option("--mode", run_flags.mode, "absorbing | unitary");
  run->add_option("--classical", run_flags.classical, "Also write classical baselines: on | off");
  run->add_option("--output", run_flags.output, "Output directory");

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Fit steps-to-50%-arrival against level count");
  sweep->add_option("--family", sweep_flags.families, "all or comma list of cycle, loop-zigzag, loop-armchair, capped-zigzag, capped-armchair");
  sweep->add_option("--levels", sweep_flags.levels, "Comma list of level counts");
  sweep->add_option("--steps", sweep_flags.steps, "Step budget per run");
  sweep->add_option("--coin", sweep_flags.coin, "Override the family default coin");
  sweep->add_option("--output", sweep_flags.output, "Fit table CSV (structure,m,b,r2)");
  sweep->add_option("--points", sweep_flags.points, "Optional points CSV (structure,levels,n_half)");

  CompareFlags compare_flags;
  auto* compare = app.add_subcommand("compare-coins", "Arrival curves for several coins on one structure");
  compare->add_option("--structure", compare_flags.structure, "Structure");
  compare->add_option("--init", compare_flags.init, "Initial set");
  compare->add_option("--coins", compare_flags.coins, "Comma list of coins");
  compare->add_option("--steps", compare_flags.steps, "Number of steps");
  compare->add_flag("--classical", compare_flags.classical, "Add classical baseline columns");
  compare->add_option("--output", compare_flags.output, "Output CSV path");

  ExportFlags export_flags;
  auto* exp = app.add_subcommand("export-graph", "Write the port adjacency and optionally a level map");
  exp->add_option("--structure", export_flags.structure, "Structure");
  exp->add_option("--init", export_flags.init, "Initial set for the level map");
  exp->add_option("--output", export_flags.output, "Adjacency file (default stdout)");
  exp->add_option("--levels", export_flags.levels, "Level map CSV (node,level)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return do_run(run_flags);
    if (*sweep) return do_sweep(sweep_flags);
    if (*compare) return do_compare(compare_flags);
    if (*exp) return do_export(export_flags);
  } catch (const qwalk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
  return 0;
}
