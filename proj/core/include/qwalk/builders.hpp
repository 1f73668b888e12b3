#pragma once

#include "qwalk/graph.hpp"

namespace qwalk {

enum class TubeKind { kZigzag, kArmchair };

const char* to_string(TubeKind kind) noexcept;

// Cycle C_n. Port 1 at node j leads to port 0 at node j+1 (mod n).
PortGraph build_cycle(int n);

// Truncated icosahedron (60 nodes, 90 edges), assembled ring by ring along a
// five-fold axis: apex pentagon, 5, 10, 10, 10, 10, 5, apex pentagon.
// Anchor is the top apex pentagon.
PortGraph build_c60();

// Honeycomb torus: a nanotube with `circumference` hexagons around it and
// `repeats` translation units along it, ends identified. Each repeat adds two
// atom rings, so a loop has repeats + 1 levels between opposite rings.
//   zigzag:   rings of `circumference` atoms, bonds between rings alternate
//             zig-zag (two per atom) and axial (one per atom);
//   armchair: rings of 2 * `circumference` atoms carrying dimer bonds, each atom
//             bonded axially to both neighbouring rings.
// Anchor is ring 0. Requires circumference >= 3 and repeats >= 2.
PortGraph build_nanotube_loop(TubeKind kind, int circumference, int repeats);

// Closed tube with half-C60 caps: a (5,5) armchair tube with pentagon apices or
// a (9,0) zig-zag tube with hexagon apices. `tube_layers` counts the atom rings
// strictly between the two caps (10 atoms each for armchair, 9 for zig-zag);
// zig-zag layers come in pairs. The C60 itself is tube_layers = 4 (armchair)
// or 2 (zig-zag). Anchor is the top apex face.
PortGraph build_capped_nanotube(TubeKind kind, int tube_layers);

int c60_tube_layers(TubeKind kind) noexcept;

// Number of levels between the apex faces of a capped tube.
int capped_levels(TubeKind kind, int tube_layers) noexcept;

// Inverse of capped_levels; throws invalid-parameter when no tube has exactly
// `levels` levels.
int capped_tube_layers_for_levels(TubeKind kind, int levels);

}  // namespace qwalk
