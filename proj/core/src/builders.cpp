#include "qwalk/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(TubeKind kind) noexcept {
  return kind == TubeKind::kZigzag ? "zigzag" : "armchair";
}

namespace {

// Collects nodes drawn on a cylinder (angle in turns, height) and edges, then
// numbers each node's ports counterclockwise as seen from outside the
// cylinder. The ordering is the rotation system of the embedding.
class CylinderLayout {
 public:
  explicit CylinderLayout(double period_z = 0.0) : period_z_(period_z) {}

  NodeId add_node(double angle_turns, double z) {
    angle_.push_back(angle_turns - std::floor(angle_turns));
    z_.push_back(z);
    adjacency_.emplace_back();
    return static_cast<NodeId>(angle_.size() - 1);
  }

  void add_edge(NodeId u, NodeId v) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }

  PortGraph finish(std::size_t degree, GraphMetadata metadata) {
    const std::size_t n = adjacency_.size();
    for (NodeId u = 0; u < n; ++u) {
      if (adjacency_[u].size() != degree)
        throw std::logic_error("layout node " + std::to_string(u) + " has wrong degree");
      auto& nbrs = adjacency_[u];
      std::vector<std::pair<double, NodeId>> keyed;
      keyed.reserve(nbrs.size());
      for (NodeId v : nbrs) keyed.emplace_back(direction(u, v), v);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t a = 0; a < nbrs.size(); ++a) nbrs[a] = keyed[a].second;
    }

    std::vector<Dart> edge_map(n * degree);
    std::vector<Port> rotation(n * degree);
    for (NodeId u = 0; u < n; ++u) {
      for (Port a = 0; a < degree; ++a) {
        const NodeId v = adjacency_[u][a];
        const auto& back = adjacency_[v];
        const auto b = static_cast<Port>(std::find(back.begin(), back.end(), u) - back.begin());
        edge_map[u * degree + a] = {v, b};
        rotation[u * degree + a] = static_cast<Port>((a + 1) % degree);
      }
    }
    return PortGraph(degree, std::move(edge_map), std::move(rotation), std::move(metadata));
  }

 private:
  static double wrap(double x, double period) {
    return x - period * std::round(x / period);
  }

  // Direction of v seen from u, in [0, 2pi), measured counterclockwise.
  double direction(NodeId u, NodeId v) const {
    const double dx = wrap(angle_[v] - angle_[u], 1.0) * 2.0 * std::numbers::pi;
    double dz = z_[v] - z_[u];
    if (period_z_ > 0) dz = wrap(dz, period_z_);
    double phi = std::atan2(dz, dx);
    if (phi < 0) phi += 2.0 * std::numbers::pi;
    return phi;
  }

  double period_z_;
  std::vector<double> angle_;
  std::vector<double> z_;
  std::vector<std::vector<NodeId>> adjacency_;
};

PortGraph zigzag_loop(int n, int repeats, GraphMetadata meta) {
  const int layers = 2 * repeats;
  CylinderLayout layout(layers);
  // Ring offsets repeat with period four: 0, 1/2, 1/2, 0 (in atom spacings).
  auto offset = [](int layer) { return (layer % 4 == 1 || layer % 4 == 2) ? 0.5 : 0.0; };
  for (int l = 0; l < layers; ++l)
    for (int i = 0; i < n; ++i) layout.add_node((i + offset(l)) / n, l);
  auto id = [n](int l, int i) { return static_cast<NodeId>(l * n + ((i % n) + n) % n); };
  for (int l = 0; l < layers; ++l) {
    for (int i = 0; i < n; ++i) {
      if (l % 2 == 0) {
        // Zig-zag bonds; the upper atom sits halfway between two lower atoms.
        if (l % 4 == 0) {
          layout.add_edge(id(l, i), id(l + 1, i));
          layout.add_edge(id(l, i + 1), id(l + 1, i));
        } else {
          layout.add_edge(id(l, i - 1), id(l + 1, i));
          layout.add_edge(id(l, i), id(l + 1, i));
        }
      } else {
        layout.add_edge(id(l, i), id((l + 1) % layers, i));
      }
    }
  }
  for (int i = 0; i < n; ++i) meta.anchor.push_back(id(0, i));
  return layout.finish(3, std::move(meta));
}

PortGraph armchair_loop(int n, int repeats, GraphMetadata meta) {
  const int columns = 2 * repeats;
  const int m = 2 * n;
  CylinderLayout layout(columns);
  for (int c = 0; c < columns; ++c)
    for (int p = 0; p < m; ++p) layout.add_node(static_cast<double>(p) / m, c);
  auto id = [m](int c, int p) { return static_cast<NodeId>(c * m + ((p % m) + m) % m); };
  for (int c = 0; c < columns; ++c) {
    for (int p = 0; p < m; ++p) {
      if ((p + c) % 2 == 0) layout.add_edge(id(c, p), id(c, p + 1));
      layout.add_edge(id(c, p), id((c + 1) % columns, p));
    }
  }
  for (int p = 0; p < m; ++p) meta.anchor.push_back(id(0, p));
  return layout.finish(3, std::move(meta));
}

// (5,5) tube with pentagon-apex caps; `columns` rings of 10 atoms between
// the caps. Each cap is an apex pentagon plus a ring of 5.
PortGraph pentagonal_capped(int columns, GraphMetadata meta) {
  constexpr int kRing = 10;
  CylinderLayout layout;
  std::vector<NodeId> top_apex(5), top_ring(5), bottom_apex(5), bottom_ring(5);
  std::vector<std::vector<NodeId>> col(columns, std::vector<NodeId>(kRing));

  for (int i = 0; i < 5; ++i) top_apex[i] = layout.add_node((2 * i + 0.5) / kRing, 0);
  for (int i = 0; i < 5; ++i) top_ring[i] = layout.add_node((2 * i + 0.5) / kRing, -1);
  for (int j = 0; j < columns; ++j)
    for (int p = 0; p < kRing; ++p) col[j][p] = layout.add_node(static_cast<double>(p) / kRing, -2 - j);
  // The bottom cap sits over atom pairs that are not dimer-bonded in the last
  // column; this fixes its rotation.
  const int last = columns - 1;
  const int shift = (last % 2 == 1) ? 1 : 0;
  for (int i = 0; i < 5; ++i)
    bottom_ring[i] = layout.add_node((2 * i + shift + 0.5) / kRing, -2 - columns);
  for (int i = 0; i < 5; ++i)
    bottom_apex[i] = layout.add_node((2 * i + shift + 0.5) / kRing, -3 - columns);

  auto at = [&](int j, int p) { return col[j][((p % kRing) + kRing) % kRing]; };
  for (int i = 0; i < 5; ++i) {
    layout.add_edge(top_apex[i], top_apex[(i + 1) % 5]);
    layout.add_edge(top_apex[i], top_ring[i]);
    layout.add_edge(top_ring[i], at(0, 2 * i));
    layout.add_edge(top_ring[i], at(0, 2 * i + 1));
  }
  for (int j = 0; j < columns; ++j) {
    for (int p = 0; p < kRing; ++p) {
      // Column 0 pairs (1,2),(3,4)...; parity alternates down the tube.
      if ((p + j) % 2 == 1) layout.add_edge(at(j, p), at(j, p + 1));
      if (j + 1 < columns) layout.add_edge(at(j, p), at(j + 1, p));
    }
  }
  for (int i = 0; i < 5; ++i) {
    layout.add_edge(bottom_ring[i], at(last, 2 * i + shift));
    layout.add_edge(bottom_ring[i], at(last, 2 * i + shift + 1));
    layout.add_edge(bottom_ring[i], bottom_apex[i]);
    layout.add_edge(bottom_apex[i], bottom_apex[(i + 1) % 5]);
  }
  meta.anchor = top_apex;
  return layout.finish(3, std::move(meta));
}

// (9,0) tube with hexagon-apex caps. A cap is an apex hexagon, a ring of 6
// and a ring of 9; around the apex hexagon pentagons and hexagons alternate.
// Angles below are in degrees.
PortGraph hexagonal_capped(int layers, GraphMetadata meta) {
  CylinderLayout layout;
  auto deg = [](double d) { return d / 360.0; };

  struct Cap {
    std::vector<NodeId> apex, ring, outer;  // outer ring listed by angle
    std::vector<double> outer_angle;
  };
  // The cap's outer ring faces the tube; `sign` flips heights for the bottom.
  auto make_cap = [&](double rot, double z0, double sign) {
    Cap cap;
    for (int i = 0; i < 6; ++i) cap.apex.push_back(layout.add_node(deg(60 * i + rot), z0));
    for (int i = 0; i < 6; ++i) cap.ring.push_back(layout.add_node(deg(60 * i + rot), z0 + sign));
    for (int i = 0; i < 6; ++i) {
      layout.add_edge(cap.apex[i], cap.apex[(i + 1) % 6]);
      layout.add_edge(cap.apex[i], cap.ring[i]);
    }
    for (int i = 0; i < 6; ++i) {
      const NodeId left = cap.ring[i];
      const NodeId right = cap.ring[(i + 1) % 6];
      if (i % 2 == 0) {
        // Pentagon over apex edge i: one outer atom joins both ring atoms.
        const double a = 60 * i + 30 + rot;
        const NodeId v = layout.add_node(deg(a), z0 + 2 * sign);
        layout.add_edge(left, v);
        layout.add_edge(right, v);
        cap.outer.push_back(v);
        cap.outer_angle.push_back(a);
      } else {
        // Hexagon over apex edge i: a bonded pair of outer atoms.
        const double a = 60 * i + 10 + rot;
        const double b = 60 * i + 50 + rot;
        const NodeId v = layout.add_node(deg(a), z0 + 2 * sign);
        const NodeId w = layout.add_node(deg(b), z0 + 2 * sign);
        layout.add_edge(left, v);
        layout.add_edge(right, w);
        layout.add_edge(v, w);
        cap.outer.insert(cap.outer.end(), {v, w});
        cap.outer_angle.insert(cap.outer_angle.end(), {a, b});
      }
    }
    return cap;
  };

  const Cap top = make_cap(0.0, 0.0, -1.0);

  // Tube rings: atoms every 40 degrees, offset 30 or 50 with period four.
  std::vector<std::vector<NodeId>> ring(layers);
  std::vector<double> base(layers);
  for (int l = 0; l < layers; ++l) {
    base[l] = (l % 4 == 0 || l % 4 == 3) ? 30.0 : 50.0;
    for (int k = 0; k < 9; ++k) ring[l].push_back(layout.add_node(deg(base[l] + 40 * k), -3 - l));
  }
  auto atom_at = [&](int l, double angle) {
    const double rel = angle - base[l];
    const long k = std::lround(rel / 40.0);
    return ring[l][static_cast<std::size_t>(((k % 9) + 9) % 9)];
  };

  for (std::size_t k = 0; k < top.outer.size(); ++k)
    layout.add_edge(top.outer[k], atom_at(0, top.outer_angle[k]));
  for (int l = 0; l + 1 < layers; ++l) {
    for (int k = 0; k < 9; ++k) {
      const double a = base[l + 1] + 40 * k;
      const NodeId upper = ring[l + 1][k];
      if (l % 2 == 0) {
        layout.add_edge(atom_at(l, a - 20), upper);
        layout.add_edge(atom_at(l, a + 20), upper);
      } else {
        layout.add_edge(atom_at(l, a), upper);
      }
    }
  }

  // Each extra repeat screws the tube by 20 degrees; the bottom cap follows.
  const int repeats = (layers - 2) / 2;
  const Cap bottom = make_cap(60.0 + 20.0 * repeats, -(3.0 + layers) - 2.0, 1.0);
  for (std::size_t k = 0; k < bottom.outer.size(); ++k)
    layout.add_edge(bottom.outer[k], atom_at(layers - 1, bottom.outer_angle[k]));

  meta.anchor = top.apex;
  return layout.finish(3, std::move(meta));
}

}  // namespace

PortGraph build_cycle(int n) {
  if (n < 3) throw_invalid("cycle needs at least 3 nodes, got " + std::to_string(n));
  std::vector<Dart> edge_map(2 * static_cast<std::size_t>(n));
  std::vector<Port> rotation(edge_map.size());
  for (int j = 0; j < n; ++j) {
    const auto next = static_cast<NodeId>((j + 1) % n);
    const auto prev = static_cast<NodeId>((j + n - 1) % n);
    edge_map[2 * j + 0] = {prev, 1};
    edge_map[2 * j + 1] = {next, 0};
    rotation[2 * j + 0] = 1;
    rotation[2 * j + 1] = 0;
  }
  GraphMetadata meta{StructureKind::kCycle, {{"n", n}}, {0}};
  return PortGraph(2, std::move(edge_map), std::move(rotation), std::move(meta));
}

PortGraph build_c60() {
  return pentagonal_capped(4, GraphMetadata{StructureKind::kC60, {}, {}});
}

PortGraph build_nanotube_loop(TubeKind kind, int circumference, int repeats) {
  if (circumference < 3)
    throw_invalid("nanotube circumference must be at least 3, got " + std::to_string(circumference));
  if (repeats < 2) throw_invalid("nanotube loop needs at least 2 repeats, got " + std::to_string(repeats));
  if (kind == TubeKind::kZigzag) {
    GraphMetadata meta{StructureKind::kZigzagLoop, {{"circumference", circumference}, {"repeats", repeats}}, {}};
    return zigzag_loop(circumference, repeats, std::move(meta));
  }
  GraphMetadata meta{StructureKind::kArmchairLoop, {{"circumference", circumference}, {"repeats", repeats}}, {}};
  return armchair_loop(circumference, repeats, std::move(meta));
}

PortGraph build_capped_nanotube(TubeKind kind, int tube_layers) {
  if (kind == TubeKind::kArmchair) {
    if (tube_layers < 2)
      throw_invalid("capped armchair tube needs at least 2 tube layers, got " + std::to_string(tube_layers));
    return pentagonal_capped(tube_layers,
                             GraphMetadata{StructureKind::kArmchairCapped, {{"tube_layers", tube_layers}}, {}});
  }
  if (tube_layers < 2 || tube_layers % 2 != 0)
    throw_invalid("capped zigzag tube needs an even number (>= 2) of tube layers, got " +
                  std::to_string(tube_layers));
  return hexagonal_capped(tube_layers,
                          GraphMetadata{StructureKind::kZigzagCapped, {{"tube_layers", tube_layers}}, {}});
}

int c60_tube_layers(TubeKind kind) noexcept { return kind == TubeKind::kArmchair ? 4 : 2; }

int capped_levels(TubeKind kind, int tube_layers) noexcept {
  return tube_layers + (kind == TubeKind::kArmchair ? 4 : 6);
}

int capped_tube_layers_for_levels(TubeKind kind, int levels) {
  const int layers = levels - (kind == TubeKind::kArmchair ? 4 : 6);
  const bool ok = kind == TubeKind::kArmchair ? layers >= 2 : (layers >= 2 && layers % 2 == 0);
  if (!ok)
    throw_invalid(std::string("no capped ") + to_string(kind) + " tube has " + std::to_string(levels) +
                  " levels");
  return layers;
}

}  // namespace qwalk
