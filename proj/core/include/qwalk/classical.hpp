#pragma once

#include <span>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/levels.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

// Exact probability vector of an unbiased, memoryless random walk.
struct ClassicalState {
  std::vector<double> probabilities;
  double absorbed = 0.0;
  long t = 0;

  double total() const;
};

// Uniform distribution over `nodes`.
ClassicalState point_distribution(const PortGraph& g, std::span<const NodeId> nodes);

// Without `stay` probability splits evenly over the d neighbours (a d-sided
// coin); with `stay` over the neighbours and the node itself ((d+1)-sided).
ClassicalState classical_step(const ClassicalState& state, const PortGraph& g, bool stay);

// Target probability is moved into `absorbed` at step 0 and after every step.
TransportRecord classical_evolve_absorbing(ClassicalState state, const PortGraph& g,
                                           std::span<const NodeId> targets, bool stay,
                                           const LevelMap& levels, long steps);

}  // namespace qwalk
