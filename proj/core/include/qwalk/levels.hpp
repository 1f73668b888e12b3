#pragma once

#include <span>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// Projection of the nodes onto breadth-first distance from an initial set.
struct LevelMap {
  std::vector<int> level;          // per node
  int num_levels = 0;              // 1 + max level
  std::vector<NodeId> initial_set;  // sorted
  std::vector<NodeId> target_set;   // nodes at the maximal level, sorted
};

LevelMap compute_levels(const PortGraph& g, std::span<const NodeId> initial_set);

// Nodes at maximal breadth-first distance from `initial_set`; ties keep all.
std::vector<NodeId> antipodal_target(const PortGraph& g, std::span<const NodeId> initial_set);

}  // namespace qwalk
