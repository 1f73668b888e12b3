#include "qwalk/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>

#include "qwalk/builders.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"
#include "qwalk/faces.hpp"
#include "qwalk/levels.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  const long v = parse_integer(text, what);
  if (v < -1'000'000 || v > 1'000'000) throw_invalid(what + " out of range: " + text);
  return static_cast<int>(v);
}

std::vector<NodeId> face_of_size(const PortGraph& g, std::size_t size) {
  std::vector<NodeId> best;
  for (const Face& f : trace_faces(g)) {
    if (f.size() != size) continue;
    auto nodes = f.nodes();
    std::sort(nodes.begin(), nodes.end());
    if (best.empty() || nodes < best) best = std::move(nodes);
  }
  if (best.empty())
    throw_invalid(structure_slug(g.metadata()) + " has no face with " + std::to_string(size) + " nodes");
  return best;
}

}  // namespace

PortGraph build_structure(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw_invalid("empty structure");
  const std::string& kind = parts[0];
  auto expect = [&](std::size_t count, const char* usage) {
    if (parts.size() != count + 1) throw_invalid("structure '" + spec + "': expected " + usage);
  };
  if (kind == "cycle") {
    expect(1, "cycle:<n>");
    return build_cycle(parse_int(parts[1], "cycle size"));
  }
  if (kind == "c60") {
    expect(0, "c60");
    return build_c60();
  }
  if (kind == "loop-zigzag" || kind == "loop-armchair") {
    expect(2, "loop-<kind>:<circumference>:<repeats>");
    return build_nanotube_loop(kind == "loop-zigzag" ? TubeKind::kZigzag : TubeKind::kArmchair,
                               parse_int(parts[1], "circumference"), parse_int(parts[2], "repeats"));
  }
  if (kind == "capped-zigzag" || kind == "capped-armchair") {
    expect(1, "capped-<kind>:<tube_layers>");
    return build_capped_nanotube(kind == "capped-zigzag" ? TubeKind::kZigzag : TubeKind::kArmchair,
                                 parse_int(parts[1], "tube layers"));
  }
  throw_invalid("unknown structure '" + spec + "'");
}

std::vector<NodeId> resolve_initial_set(const PortGraph& g, const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string kind = parts.empty() ? std::string() : parts[0];
  const StructureKind sk = g.metadata().kind;
  if (kind == "node") {
    if (parts.size() > 2) throw_invalid("init '" + spec + "': expected node[:<id>]");
    const int id = parts.size() == 2 ? parse_int(parts[1], "initial node") : 0;
    if (id < 0 || static_cast<std::size_t>(id) >= g.node_count())
      throw_invalid("initial node " + std::to_string(id) + " out of range");
    return {static_cast<NodeId>(id)};
  }
  if (parts.size() != 1) throw_invalid("init '" + spec + "' takes no argument");
  if (kind == "pentagon-face") return face_of_size(g, 5);
  if (kind == "hexagon-face") return face_of_size(g, 6);
  if (kind == "ring") {
    if (sk != StructureKind::kZigzagLoop && sk != StructureKind::kArmchairLoop)
      throw_invalid("init 'ring' needs a nanotube loop");
    return g.metadata().anchor;
  }
  if (kind == "apex-face") {
    if (sk != StructureKind::kZigzagCapped && sk != StructureKind::kArmchairCapped && sk != StructureKind::kC60)
      throw_invalid("init 'apex-face' needs a capped nanotube or c60");
    return g.metadata().anchor;
  }
  throw_invalid("unknown init '" + spec + "' (expected node, pentagon-face, hexagon-face, ring or apex-face)");
}

long parse_integer(const std::string& text, const std::string& what) {
  long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw_invalid(what + " must be an integer, got '" + text + "'");
  return value;
}

void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value) {
  if (key == "structure") {
    config.structure = value;
  } else if (key == "coin") {
    config.coins.clear();
    for (auto& c : split(value, ',')) config.coins.push_back(trim(c));
  } else if (key == "init") {
    config.init = value;
  } else if (key == "steps") {
    config.steps = parse_integer(value, "steps");
  } else if (key == "mode") {
    if (value == "absorbing") config.mode = EvolutionMode::kAbsorbing;
    else if (value == "unitary") config.mode = EvolutionMode::kUnitary;
    else throw_invalid("mode must be 'absorbing' or 'unitary', got '" + value + "'");
  } else if (key == "classical") {
    if (value == "on" || value == "true" || value == "1") config.classical = true;
    else if (value == "off" || value == "false" || value == "0") config.classical = false;
    else throw_invalid("classical must be on or off, got '" + value + "'");
  } else if (key == "output") {
    config.output_dir = value;
  } else {
    throw_invalid("unknown config key '" + key + "'");
  }
}

std::map<std::string, std::string> read_key_values(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::kParse, "config line " + std::to_string(line_no) + ": expected key=value");
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

void validate(const ExperimentConfig& config) {
  if (config.steps < 0) throw_invalid("steps must be non-negative, got " + std::to_string(config.steps));
  if (config.coins.empty()) throw_invalid("no coin given");
  const PortGraph g = build_structure(config.structure);
  resolve_initial_set(g, config.init);
  for (const auto& name : config.coins) {
    const Coin coin = coin_by_name(name);
    if (coin.dim() != g.degree() && coin.dim() != g.degree() + 1)
      throw_invalid("coin " + name + " has dimension " + std::to_string(coin.dim()) + " but " + config.structure +
                    " has degree " + std::to_string(g.degree()));
  }
  if (config.classical && config.mode != EvolutionMode::kAbsorbing)
    throw_invalid("classical baselines are only available in absorbing mode");
}

std::string output_name(const std::string& structure, const std::string& curve, EvolutionMode mode) {
  std::string slug = structure;
  std::replace(slug.begin(), slug.end(), ':', '-');
  return slug + "_" + curve + "_" + to_string(mode) + ".csv";
}

void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::kIo, "cannot open " + tmp.string());
    writer(os);
    os.flush();
    if (!os) throw Error(ErrorKind::kIo, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RunReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  const PortGraph g = build_structure(config.structure);
  const auto initial = resolve_initial_set(g, config.init);
  const LevelMap levels = compute_levels(g, initial);

  struct Job {
    std::string curve;
    std::function<TransportRecord()> make;
  };
  std::vector<Job> jobs;
  for (const auto& name : config.coins) {
    jobs.push_back({name, [&, name] {
                      const Coin coin = coin_by_name(name);
                      const WalkState start = make_initial_state(g, levels.initial_set, coin.dim());
                      return config.mode == EvolutionMode::kAbsorbing
                                 ? evolve_absorbing(start, g, coin, levels.target_set, levels, config.steps)
                                 : evolve_unitary(start, g, coin, levels, config.steps);
                    }});
  }
  if (config.classical) {
    for (bool stay : {false, true}) {
      const auto sides = g.degree() + (stay ? 1 : 0);
      jobs.push_back({"classical-" + std::to_string(sides) + "sided", [&, stay] {
                        return classical_evolve_absorbing(point_distribution(g, levels.initial_set), g,
                                                          levels.target_set, stay, levels, config.steps);
                      }});
    }
  }

  RunReport report;
  std::mutex mutex;
  std::vector<std::filesystem::path> written(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    try {
      const TransportRecord record = jobs[i].make();
      const auto path = config.output_dir / output_name(config.structure, jobs[i].curve, config.mode);
      write_file_atomically(path, [&](std::ostream& os) { write_record_csv(os, record); });
      written[i] = path;
    } catch (const std::exception& e) {
      std::lock_guard lock(mutex);
      report.failures.push_back({config.structure + " curve=" + jobs[i].curve, e.what()});
    }
  });
  for (auto& p : written)
    if (!p.empty()) report.written.push_back(std::move(p));
  return report;
}

CoinComparison compare_coins(const std::string& structure, const std::string& init,
                             const std::vector<std::string>& coins, long steps, bool classical) {
  if (coins.empty()) throw_invalid("coin list is empty");
  if (steps < 0) throw_invalid("steps must be non-negative, got " + std::to_string(steps));
  const PortGraph g = build_structure(structure);
  const LevelMap levels = compute_levels(g, resolve_initial_set(g, init));
  std::vector<Coin> resolved;
  for (const auto& name : coins) resolved.push_back(coin_by_name(name));

  CoinComparison out;
  out.columns = coins;
  if (classical) {
    out.columns.push_back("classical-" + std::to_string(g.degree()) + "sided");
    out.columns.push_back("classical-" + std::to_string(g.degree() + 1) + "sided");
  }
  out.arrival.resize(out.columns.size());
  parallel_for(out.columns.size(), [&](std::size_t i) {
    TransportRecord record;
    if (i < resolved.size()) {
      const WalkState start = make_initial_state(g, levels.initial_set, resolved[i].dim());
      record = evolve_absorbing(start, g, resolved[i], levels.target_set, levels, steps);
    } else {
      const bool stay = i == resolved.size() + 1;
      record = classical_evolve_absorbing(point_distribution(g, levels.initial_set), g, levels.target_set, stay,
                                          levels, steps);
    }
    out.arrival[i] = std::move(record.arrival);
  });
  return out;
}

void write_comparison_csv(std::ostream& os, const CoinComparison& comparison) {
  os << "step";
  for (const auto& c : comparison.columns) os << ',' << c;
  os << '\n';
  const std::size_t rows = comparison.arrival.empty() ? 0 : comparison.arrival.front().size();
  for (std::size_t t = 0; t < rows; ++t) {
    os << t;
    for (const auto& series : comparison.arrival) os << ',' << format_double(series[t]);
    os << '\n';
  }
}

std::vector<SweepResult> run_sweeps(const SweepConfig& config) {
  if (config.families.empty()) throw_invalid("no structure family given");
  if (config.levels.size() < 2) throw_invalid("a sweep needs at least 2 level counts");
  std::vector<SweepResult> results;
  for (StructureFamily family : config.families) {
    const Coin coin = config.coin.empty() ? family_default_coin(family) : coin_by_name(config.coin);
    results.push_back(scaling_sweep(family, config.levels, coin, config.steps));
  }
  return results;
}

}  // namespace qwalk
