#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using NodeId = std::uint32_t;
using Port = std::uint32_t;

// One end of an edge: the `port`-th edge end at `node`.
struct Dart {
  NodeId node = 0;
  Port port = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

enum class StructureKind {
  kCycle,
  kC60,
  kZigzagLoop,
  kArmchairLoop,
  kZigzagCapped,
  kArmchairCapped,
  kCustom,
};

const char* to_string(StructureKind kind) noexcept;

struct GraphMetadata {
  StructureKind kind = StructureKind::kCustom;
  // Build parameters in construction order, e.g. {"circumference", 6}.
  std::vector<std::pair<std::string, int>> params;
  // Natural starting set: node 0 of a cycle, ring 0 of a loop, the top apex
  // face of a capped tube.
  std::vector<NodeId> anchor;
};

// Regular undirected graph with an edge-label function e(u, a) = (v, b) and an
// optional rotation system (cyclic port order at each node).
//
// The constructor checks every structural invariant: e is a fixed-point-free
// involution, no self loops or parallel edges, degree-regular, connected.
class PortGraph {
 public:
  // `edge_map[u * degree + a]` is e(u, a). `rotation`, when non-empty, holds
  // the successor of each port in the cyclic order at its node, indexed the
  // same way.
  PortGraph(std::size_t degree, std::vector<Dart> edge_map, std::vector<Port> rotation,
            GraphMetadata metadata);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t edge_count() const noexcept { return node_count_ * degree_ / 2; }

  Dart follow(Dart d) const { return edge_map_[index(d)]; }
  NodeId neighbor(NodeId u, Port a) const { return follow({u, a}).node; }
  std::span<const Dart> ports(NodeId u) const {
    return {edge_map_.data() + static_cast<std::size_t>(u) * degree_, degree_};
  }

  bool has_rotation() const noexcept { return !rotation_.empty(); }
  // Next port after `a` in the cyclic order at `u`. Requires a rotation system.
  Port rotate(NodeId u, Port a) const;

  const GraphMetadata& metadata() const noexcept { return metadata_; }

 private:
  std::size_t index(Dart d) const { return static_cast<std::size_t>(d.node) * degree_ + d.port; }
  void validate() const;

  std::size_t node_count_ = 0;
  std::size_t degree_ = 0;
  std::vector<Dart> edge_map_;
  std::vector<Port> rotation_;
  GraphMetadata metadata_;
};

// Build a PortGraph from per-node neighbour lists; port a at u is the a-th
// entry of adjacency[u]. No rotation system is attached.
PortGraph from_adjacency(const std::vector<std::vector<NodeId>>& adjacency,
                         GraphMetadata metadata = {});

// Short deterministic slug such as "cycle-18" or "loop-zigzag-6-90".
std::string structure_slug(const GraphMetadata& metadata);

}  // namespace qwalk
