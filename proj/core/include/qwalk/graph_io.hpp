#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/graph.hpp"
#include "qwalk/levels.hpp"

namespace qwalk {

// One line per node: `u: (v0,b0) (v1,b1) ...` listing e(u, a) for a = 0..d-1.
void write_adjacency(std::ostream& os, const PortGraph& g);

// Inverse of write_adjacency. The result carries no rotation system.
PortGraph read_adjacency(std::istream& is);

// `node,level` with a header row.
void write_levels_csv(std::ostream& os, const LevelMap& levels);

}  // namespace qwalk
