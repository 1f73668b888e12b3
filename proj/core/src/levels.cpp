#include "qwalk/levels.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

LevelMap compute_levels(const PortGraph& g, std::span<const NodeId> initial_set) {
  if (initial_set.empty()) throw_invalid("initial node set is empty");
  LevelMap map;
  map.level.assign(g.node_count(), -1);
  std::deque<NodeId> queue;
  for (NodeId s : initial_set) {
    if (s >= g.node_count()) throw_invalid("initial node " + std::to_string(s) + " out of range");
    if (map.level[s] == 0) continue;
    map.level[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const Dart& d : g.ports(u)) {
      if (map.level[d.node] < 0) {
        map.level[d.node] = map.level[u] + 1;
        queue.push_back(d.node);
      }
    }
  }
  const int max_level = *std::max_element(map.level.begin(), map.level.end());
  map.num_levels = max_level + 1;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (map.level[v] == 0) map.initial_set.push_back(v);
    if (map.level[v] == max_level) map.target_set.push_back(v);
  }
  return map;
}

std::vector<NodeId> antipodal_target(const PortGraph& g, std::span<const NodeId> initial_set) {
  return compute_levels(g, initial_set).target_set;
}

}  // namespace qwalk
