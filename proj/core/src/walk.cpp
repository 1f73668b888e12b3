#include "qwalk/walk.hpp"

#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

double WalkState::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes) sum += std::norm(a);
  return sum;
}

double WalkState::node_probability(NodeId j) const {
  double sum = 0.0;
  for (std::size_t c = 0; c < cdim; ++c) sum += std::norm(at(j, c));
  return sum;
}

namespace {

void check_cdim(const PortGraph& g, std::size_t cdim) {
  if (cdim != g.degree() && cdim != g.degree() + 1)
    throw_invalid("coin dimension " + std::to_string(cdim) + " does not fit degree " +
                  std::to_string(g.degree()) + " (expected d or d+1)");
}

std::vector<std::size_t> shift_destinations(const PortGraph& g, std::size_t cdim) {
  std::vector<std::size_t> dest(g.node_count() * cdim);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (std::size_t a = 0; a < cdim; ++a) {
      if (a < g.degree()) {
        const Dart there = g.follow({u, static_cast<Port>(a)});
        dest[u * cdim + a] = there.node * cdim + there.port;
      } else {
        dest[u * cdim + a] = u * cdim + a;
      }
    }
  }
  return dest;
}

}  // namespace

WalkState make_initial_state(const PortGraph& g, std::span<const NodeId> nodes, std::size_t cdim) {
  if (nodes.empty()) throw_invalid("initial node set is empty");
  check_cdim(g, cdim);
  WalkState state;
  state.cdim = cdim;
  state.amplitudes.assign(g.node_count() * cdim, 0.0);
  std::vector<char> chosen(g.node_count(), 0);
  std::size_t distinct = 0;
  for (NodeId v : nodes) {
    if (v >= g.node_count()) throw_invalid("initial node " + std::to_string(v) + " out of range");
    if (!chosen[v]) ++distinct;
    chosen[v] = 1;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(distinct * cdim));
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (chosen[v])
      for (std::size_t c = 0; c < cdim; ++c) state.at(v, c) = amp;
  return state;
}

WalkState shift(const WalkState& state, const PortGraph& g) {
  check_cdim(g, state.cdim);
  if (state.node_count() != g.node_count()) throw_invalid("state does not match the graph");
  const auto dest = shift_destinations(g, state.cdim);
  WalkState out = state;
  for (std::size_t i = 0; i < dest.size(); ++i) out.amplitudes[dest[i]] = state.amplitudes[i];
  return out;
}

WalkState step(const WalkState& state, const PortGraph& g, const Coin& coin) {
  WalkState out = state;
  Walker walker(g, coin);
  walker.advance(out);
  return out;
}

Walker::Walker(const PortGraph& g, Coin coin) : graph_(&g), coin_(std::move(coin)) {
  check_cdim(g, coin_.dim());
  destination_ = shift_destinations(g, coin_.dim());
  buffer_.resize(destination_.size());
}

void Walker::advance(WalkState& state) {
  const std::size_t c = coin_.dim();
  if (state.cdim != c)
    throw_invalid("coin dimension " + std::to_string(c) + " does not match state dimension " +
                  std::to_string(state.cdim));
  if (state.amplitudes.size() != destination_.size()) throw_invalid("state does not match the graph");
  const auto& m = coin_.entries();
  const std::size_t n = graph_->node_count();
  const Complex* in = state.amplitudes.data();
  for (std::size_t u = 0; u < n; ++u) {
    const Complex* block = in + u * c;
    for (std::size_t a = 0; a < c; ++a) {
      Complex sum = 0.0;
      const Complex* row = m.data() + a * c;
      for (std::size_t b = 0; b < c; ++b) sum += row[b] * block[b];
      buffer_[destination_[u * c + a]] = sum;
    }
  }
  state.amplitudes.swap(buffer_);
  ++state.t;
}

double Walker::absorb(WalkState& state, std::span<const NodeId> nodes) {
  double taken = 0.0;
  for (NodeId v : nodes) {
    for (std::size_t c = 0; c < state.cdim; ++c) {
      taken += std::norm(state.at(v, c));
      state.at(v, c) = 0.0;
    }
  }
  state.absorbed += taken;
  return taken;
}

double average_level(const WalkState& state, const LevelMap& levels, double fallback) {
  double weighted = 0.0;
  double total = 0.0;
  for (NodeId j = 0; j < state.node_count(); ++j) {
    const double p = state.node_probability(j);
    weighted += levels.level[j] * p;
    total += p;
  }
  return total > 0.0 ? weighted / total : fallback;
}

TransportRecord evolve_absorbing(WalkState state, const PortGraph& g, const Coin& coin,
                                 std::span<const NodeId> targets, const LevelMap& levels, long steps) {
  if (steps < 0) throw_invalid("step count must be non-negative, got " + std::to_string(steps));
  for (NodeId v : targets)
    if (v >= g.node_count()) throw_invalid("target node " + std::to_string(v) + " out of range");
  Walker walker(g, coin);
  TransportRecord record;
  record.mode = EvolutionMode::kAbsorbing;
  record.coin = coin.name();
  record.structure = structure_slug(g.metadata());
  record.initial_set = levels.initial_set;
  record.target_set.assign(targets.begin(), targets.end());
  record.arrival.reserve(static_cast<std::size_t>(steps) + 1);
  record.avg_level.reserve(static_cast<std::size_t>(steps) + 1);

  double last_avg = 0.0;
  auto observe = [&] {
    Walker::absorb(state, targets);
    record.arrival.push_back(state.absorbed);
    last_avg = average_level(state, levels, last_avg);
    record.avg_level.push_back(last_avg);
  };
  observe();
  for (long t = 0; t < steps; ++t) {
    walker.advance(state);
    observe();
  }
  return record;
}

TransportRecord evolve_unitary(WalkState state, const PortGraph& g, const Coin& coin,
                               const LevelMap& levels, long steps) {
  if (steps < 0) throw_invalid("step count must be non-negative, got " + std::to_string(steps));
  Walker walker(g, coin);
  TransportRecord record;
  record.mode = EvolutionMode::kUnitary;
  record.coin = coin.name();
  record.structure = structure_slug(g.metadata());
  record.initial_set = levels.initial_set;
  record.target_set = levels.target_set;
  auto observe = [&] {
    double occupation = 0.0;
    for (NodeId v : levels.target_set) occupation += state.node_probability(v);
    record.arrival.push_back(occupation);
    record.avg_level.push_back(average_level(state, levels));
  };
  observe();
  for (long t = 0; t < steps; ++t) {
    walker.advance(state);
    observe();
  }
  return record;
}

}  // namespace qwalk
