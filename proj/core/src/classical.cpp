#include "qwalk/classical.hpp"

#include <numeric>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

double ClassicalState::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

ClassicalState point_distribution(const PortGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw_invalid("initial node set is empty");
  ClassicalState state;
  state.probabilities.assign(g.node_count(), 0.0);
  std::vector<char> chosen(g.node_count(), 0);
  std::size_t distinct = 0;
  for (NodeId v : nodes) {
    if (v >= g.node_count()) throw_invalid("initial node " + std::to_string(v) + " out of range");
    if (!chosen[v]) ++distinct;
    chosen[v] = 1;
  }
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (chosen[v]) state.probabilities[v] = 1.0 / static_cast<double>(distinct);
  return state;
}

ClassicalState classical_step(const ClassicalState& state, const PortGraph& g, bool stay) {
  if (state.probabilities.size() != g.node_count()) throw_invalid("distribution does not match the graph");
  ClassicalState out;
  out.absorbed = state.absorbed;
  out.t = state.t + 1;
  out.probabilities.assign(g.node_count(), 0.0);
  const double share = 1.0 / static_cast<double>(g.degree() + (stay ? 1 : 0));
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const double p = state.probabilities[u];
    if (p == 0.0) continue;
    for (const Dart& d : g.ports(u)) out.probabilities[d.node] += p * share;
    if (stay) out.probabilities[u] += p * share;
  }
  return out;
}

TransportRecord classical_evolve_absorbing(ClassicalState state, const PortGraph& g,
                                           std::span<const NodeId> targets, bool stay,
                                           const LevelMap& levels, long steps) {
  if (steps < 0) throw_invalid("step count must be non-negative, got " + std::to_string(steps));
  TransportRecord record;
  record.mode = EvolutionMode::kAbsorbing;
  record.coin = stay ? "classical-" + std::to_string(g.degree() + 1) + "-sided"
                     : "classical-" + std::to_string(g.degree()) + "-sided";
  record.structure = structure_slug(g.metadata());
  record.initial_set = levels.initial_set;
  record.target_set.assign(targets.begin(), targets.end());

  double last_avg = 0.0;
  auto observe = [&] {
    for (NodeId v : targets) {
      if (v >= g.node_count()) throw_invalid("target node " + std::to_string(v) + " out of range");
      state.absorbed += state.probabilities[v];
      state.probabilities[v] = 0.0;
    }
    record.arrival.push_back(state.absorbed);
    double weighted = 0.0, total = 0.0;
    for (NodeId j = 0; j < g.node_count(); ++j) {
      weighted += levels.level[j] * state.probabilities[j];
      total += state.probabilities[j];
    }
    if (total > 0.0) last_avg = weighted / total;
    record.avg_level.push_back(last_avg);
  };
  observe();
  for (long t = 0; t < steps; ++t) {
    state = classical_step(state, g, stay);
    observe();
  }
  return record;
}

}  // namespace qwalk
