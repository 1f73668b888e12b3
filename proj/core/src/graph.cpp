#include "qwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::kCycle: return "cycle";
    case StructureKind::kC60: return "c60";
    case StructureKind::kZigzagLoop: return "loop-zigzag";
    case StructureKind::kArmchairLoop: return "loop-armchair";
    case StructureKind::kZigzagCapped: return "capped-zigzag";
    case StructureKind::kArmchairCapped: return "capped-armchair";
    case StructureKind::kCustom: return "custom";
  }
  return "custom";
}

PortGraph::PortGraph(std::size_t degree, std::vector<Dart> edge_map, std::vector<Port> rotation,
                     GraphMetadata metadata)
    : degree_(degree),
      edge_map_(std::move(edge_map)),
      rotation_(std::move(rotation)),
      metadata_(std::move(metadata)) {
  if (degree_ == 0) throw_invalid("degree must be positive");
  if (edge_map_.empty() || edge_map_.size() % degree_ != 0)
    throw_invalid("edge map size must be a positive multiple of the degree");
  node_count_ = edge_map_.size() / degree_;
  if (!rotation_.empty() && rotation_.size() != edge_map_.size())
    throw_invalid("rotation system size does not match the edge map");
  validate();
}

Port PortGraph::rotate(NodeId u, Port a) const {
  if (rotation_.empty())
    throw Error(ErrorKind::kUnsupportedOperation, "graph carries no rotation system");
  return rotation_[index({u, a})];
}

void PortGraph::validate() const {
  const auto n = node_count_;
  for (NodeId u = 0; u < n; ++u) {
    for (Port a = 0; a < degree_; ++a) {
      const Dart there = edge_map_[index({u, a})];
      if (there.node >= n || there.port >= degree_)
        throw_invalid("edge map points outside the graph at node " + std::to_string(u));
      if (there.node == u)
        throw_invalid("self-loop port at node " + std::to_string(u));
      if (follow(there) != Dart{u, a})
        throw_invalid("edge map is not an involution at node " + std::to_string(u));
      for (Port b = 0; b < a; ++b) {
        if (edge_map_[index({u, b})].node == there.node)
          throw_invalid("parallel edges at node " + std::to_string(u));
      }
    }
  }

  if (!rotation_.empty()) {
    // Each node's successor map must be a single cycle through all ports.
    for (NodeId u = 0; u < n; ++u) {
      Port p = 0;
      for (std::size_t k = 1; k < degree_; ++k) {
        p = rotation_[index({u, p})];
        if (p == 0 || p >= degree_) throw_invalid("rotation is not a cyclic order at node " + std::to_string(u));
      }
      if (rotation_[index({u, p})] != 0)
        throw_invalid("rotation is not a cyclic order at node " + std::to_string(u));
    }
  }

  std::vector<char> seen(n, 0);
  std::deque<NodeId> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const Dart& d : ports(u)) {
      if (!seen[d.node]) {
        seen[d.node] = 1;
        ++reached;
        queue.push_back(d.node);
      }
    }
  }
  if (reached != n) throw_invalid("graph is not connected");
}

PortGraph from_adjacency(const std::vector<std::vector<NodeId>>& adjacency, GraphMetadata metadata) {
  if (adjacency.empty()) throw_invalid("empty adjacency");
  const std::size_t d = adjacency.front().size();
  std::vector<Dart> edge_map(adjacency.size() * d);
  for (NodeId u = 0; u < adjacency.size(); ++u) {
    if (adjacency[u].size() != d) throw_invalid("graph is not regular at node " + std::to_string(u));
    for (Port a = 0; a < d; ++a) {
      const NodeId v = adjacency[u][a];
      if (v >= adjacency.size()) throw_invalid("neighbour out of range at node " + std::to_string(u));
      const auto& back = adjacency[v];
      const auto it = std::find(back.begin(), back.end(), u);
      if (it == back.end()) throw_invalid("adjacency is not symmetric at node " + std::to_string(u));
      edge_map[u * d + a] = {v, static_cast<Port>(it - back.begin())};
    }
  }
  return PortGraph(d, std::move(edge_map), {}, std::move(metadata));
}

std::string structure_slug(const GraphMetadata& metadata) {
  std::string slug = to_string(metadata.kind);
  for (const auto& [name, value] : metadata.params) slug += "-" + std::to_string(value);
  return slug;
}

}  // namespace qwalk
