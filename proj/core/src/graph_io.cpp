#include "qwalk/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/error.hpp"

namespace qwalk {

void write_adjacency(std::ostream& os, const PortGraph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    os << u << ':';
    for (const Dart& d : g.ports(u)) os << " (" << d.node << ',' << d.port << ')';
    os << '\n';
  }
}

PortGraph read_adjacency(std::istream& is) {
  std::vector<std::vector<Dart>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::kParse, "adjacency line " + std::to_string(line_no) + ": " + why);
    };
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    if (std::stoul(line.substr(0, colon)) != rows.size()) fail("nodes must be listed in order");
    std::vector<Dart> row;
    std::istringstream rest(line.substr(colon + 1));
    char open = 0, comma = 0, close = 0;
    unsigned long v = 0, b = 0;
    while (rest >> open) {
      if (open != '(' || !(rest >> v >> comma >> b >> close) || comma != ',' || close != ')')
        fail("expected (node,port)");
      row.push_back({static_cast<NodeId>(v), static_cast<Port>(b)});
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::kParse, "adjacency is empty");
  const std::size_t d = rows.front().size();
  std::vector<Dart> edge_map;
  edge_map.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw_invalid("graph is not regular");
    edge_map.insert(edge_map.end(), row.begin(), row.end());
  }
  return PortGraph(d, std::move(edge_map), {}, {});
}

void write_levels_csv(std::ostream& os, const LevelMap& levels) {
  os << "node,level\n";
  for (std::size_t v = 0; v < levels.level.size(); ++v) os << v << ',' << levels.level[v] << '\n';
}

}  // namespace qwalk
