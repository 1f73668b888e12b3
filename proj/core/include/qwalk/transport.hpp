#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class EvolutionMode { kAbsorbing, kUnitary };

const char* to_string(EvolutionMode mode) noexcept;

// Time series of one walk, one entry per step including step 0.
//
// In absorbing mode `arrival` is the accumulated arrival probability A(t) and
// `avg_level` is <x> of the surviving (renormalised) walker. In unitary mode
// nothing is removed: `arrival` holds the instantaneous target occupation and
// `avg_level` is <x>.
struct TransportRecord {
  EvolutionMode mode = EvolutionMode::kAbsorbing;
  std::vector<double> arrival;
  std::vector<double> avg_level;

  std::string structure;
  std::string coin;
  std::vector<NodeId> initial_set;
  std::vector<NodeId> target_set;

  std::size_t steps() const noexcept { return arrival.empty() ? 0 : arrival.size() - 1; }
};

// CSV with header `step,arrival,avg_level`. Values are written in shortest
// round-trip form, so read_record_csv reproduces the series exactly.
void write_record_csv(std::ostream& os, const TransportRecord& record);
TransportRecord read_record_csv(std::istream& is);

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
double parse_double(const std::string& text);

}  // namespace qwalk
