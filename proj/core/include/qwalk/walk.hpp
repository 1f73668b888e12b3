#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/levels.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

// Amplitudes over the (node, coin) basis, coin index fastest. With
// cdim == degree + 1 the last coin index is the wait state.
struct WalkState {
  std::size_t cdim = 0;
  std::vector<Complex> amplitudes;
  double absorbed = 0.0;
  long t = 0;

  std::size_t node_count() const noexcept { return cdim == 0 ? 0 : amplitudes.size() / cdim; }
  Complex& at(NodeId j, std::size_t c) { return amplitudes[j * cdim + c]; }
  const Complex& at(NodeId j, std::size_t c) const { return amplitudes[j * cdim + c]; }
  double norm_squared() const;
  // sum_c |alpha_{j,c}|^2
  double node_probability(NodeId j) const;
};

// Equal real positive amplitude on every coin state of every node in `nodes`.
WalkState make_initial_state(const PortGraph& g, std::span<const NodeId> nodes, std::size_t cdim);

// Flip-flop shift: |u,a> -> |e(u,a)> for a < degree; the wait port stays put.
WalkState shift(const WalkState& state, const PortGraph& g);

// One step S (1 (x) C). Throws invalid-parameter on a coin/state mismatch.
WalkState step(const WalkState& state, const PortGraph& g, const Coin& coin);

// Precomputes the shift permutation so repeated steps reuse one buffer.
class Walker {
 public:
  Walker(const PortGraph& g, Coin coin);

  void advance(WalkState& state);
  // Moves the probability on `nodes` into state.absorbed and zeroes it.
  static double absorb(WalkState& state, std::span<const NodeId> nodes);

  const Coin& coin() const noexcept { return coin_; }

 private:
  const PortGraph* graph_;
  Coin coin_;
  std::vector<std::size_t> destination_;
  std::vector<Complex> buffer_;
};

// Mean level of the state, normalised by its remaining norm. Returns
// `fallback` when nothing is left.
double average_level(const WalkState& state, const LevelMap& levels, double fallback = 0.0);

// Absorbing evolution for T steps. Step 0 is recorded as well (targets are
// absorbed before any step). avg_level is taken on the post-absorption state.
TransportRecord evolve_absorbing(WalkState state, const PortGraph& g, const Coin& coin,
                                 std::span<const NodeId> targets, const LevelMap& levels, long steps);

// Unitary evolution; records <x>(t) and the target-set occupation.
TransportRecord evolve_unitary(WalkState state, const PortGraph& g, const Coin& coin,
                               const LevelMap& levels, long steps);

}  // namespace qwalk
