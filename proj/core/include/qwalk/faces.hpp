#pragma once

#include <map>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// A face is the closed walk of darts traced by "cross the edge, then turn to
// the next port in the rotation". Node i of the face is darts[i].node.
struct Face {
  std::vector<Dart> darts;

  std::size_t size() const noexcept { return darts.size(); }
  std::vector<NodeId> nodes() const;
};

// Partition of all darts into faces of the embedding. Throws
// unsupported-operation when the graph has no rotation system.
std::vector<Face> trace_faces(const PortGraph& g);

// Face size -> count.
std::map<std::size_t, std::size_t> face_census(const std::vector<Face>& faces);

// V - E + F of the embedding.
long euler_characteristic(const PortGraph& g);

}  // namespace qwalk
