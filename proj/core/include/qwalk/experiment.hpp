#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

// Whole-string decimal integer; throws invalid-parameter naming `what`.
long parse_integer(const std::string& text, const std::string& what);

// Structure strings:
//   cycle:<n>   c60   loop-zigzag:<circumference>:<repeats>
//   loop-armchair:<circumference>:<repeats>
//   capped-zigzag:<tube_layers>   capped-armchair:<tube_layers>
PortGraph build_structure(const std::string& spec);

// Initial-state strings: node[:<id>], pentagon-face, hexagon-face, ring,
// apex-face. `ring` needs a nanotube loop, `apex-face` a capped tube or C60.
std::vector<NodeId> resolve_initial_set(const PortGraph& g, const std::string& spec);

struct ExperimentConfig {
  std::string structure = "cycle:18";
  std::vector<std::string> coins{"H"};
  std::string init = "node";
  long steps = 100;
  EvolutionMode mode = EvolutionMode::kAbsorbing;
  bool classical = false;
  std::filesystem::path output_dir = ".";
};

// Recognised keys: structure, coin (comma list), init, steps, mode
// (absorbing|unitary), classical (on|off|true|false|1|0), output.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

// key=value lines; blank lines and lines starting with '#' are ignored.
std::map<std::string, std::string> read_key_values(std::istream& is);

// Checks everything that can be checked without running: structure, coins,
// initial set, step count, mode/baseline combination.
void validate(const ExperimentConfig& config);

// `<structure>_<coin>_<mode>.csv` with ':' in the structure replaced by '-'.
std::string output_name(const std::string& structure, const std::string& curve, EvolutionMode mode);

struct RunFailure {
  std::string what;    // e.g. "cycle:18 coin=G7"
  std::string reason;  // exception message
};

struct RunReport {
  std::vector<std::filesystem::path> written;
  std::vector<RunFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// One record per coin plus, when requested, the d-sided and (d+1)-sided
// classical baselines. Runs execute on the worker pool; every file is written
// atomically. Invalid configs throw before anything runs.
RunReport run_experiment(const ExperimentConfig& config);

struct CoinComparison {
  std::vector<std::string> columns;           // curve names in order
  std::vector<std::vector<double>> arrival;   // one series per column
};

// Absorbing arrival for each coin from the same start and target sets.
CoinComparison compare_coins(const std::string& structure, const std::string& init,
                             const std::vector<std::string>& coins, long steps, bool classical);

// `step,<col1>,<col2>,...`
void write_comparison_csv(std::ostream& os, const CoinComparison& comparison);

struct SweepConfig {
  std::vector<StructureFamily> families;
  std::vector<int> levels{10, 14, 20, 30, 40};
  long steps = 2000;
  std::string coin;  // empty: family default
};

std::vector<SweepResult> run_sweeps(const SweepConfig& config);

// Writes via a temporary sibling file and rename.
void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace qwalk
