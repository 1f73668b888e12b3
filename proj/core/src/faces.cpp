#include "qwalk/faces.hpp"

#include "qwalk/error.hpp"

namespace qwalk {

std::vector<NodeId> Face::nodes() const {
  std::vector<NodeId> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.node);
  return out;
}

std::vector<Face> trace_faces(const PortGraph& g) {
  if (!g.has_rotation())
    throw Error(ErrorKind::kUnsupportedOperation, "face tracing needs a rotation system");
  const std::size_t d = g.degree();
  std::vector<char> used(g.node_count() * d, 0);
  std::vector<Face> faces;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (Port a = 0; a < d; ++a) {
      if (used[u * d + a]) continue;
      Face face;
      Dart cur{u, a};
      while (!used[cur.node * d + cur.port]) {
        used[cur.node * d + cur.port] = 1;
        face.darts.push_back(cur);
        const Dart there = g.follow(cur);
        cur = {there.node, g.rotate(there.node, there.port)};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::map<std::size_t, std::size_t> face_census(const std::vector<Face>& faces) {
  std::map<std::size_t, std::size_t> census;
  for (const Face& f : faces) ++census[f.size()];
  return census;
}

long euler_characteristic(const PortGraph& g) {
  const auto faces = trace_faces(g);
  return static_cast<long>(g.node_count()) - static_cast<long>(g.edge_count()) +
         static_cast<long>(faces.size());
}

}  // namespace qwalk
