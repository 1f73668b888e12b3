#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

struct FitPoint {
  double x = 0.0;  // number of levels
  double y = 0.0;  // steps to 50% arrival
};

// Least-squares line y = m x + b with r^2 = 1 - SS_res / SS_tot.
struct FitResult {
  double m = 0.0;
  double b = 0.0;
  double r2 = 0.0;
  std::vector<FitPoint> points;
};

// First step t with arrival(t) >= threshold. Throws NotReachedError carrying
// the largest arrival seen when the record never gets there.
long n_half(const TransportRecord& record, double threshold = 0.5);

// Growth over the tail of a series: max over the last `tail_fraction` of the
// samples minus the value where that tail starts. A saturated curve gives ~0.
double plateau_rise(std::span<const double> series, double tail_fraction = 0.1);

// Needs at least two distinct x values.
FitResult linear_fit(std::span<const FitPoint> points);

enum class StructureFamily {
  kCycle,
  kZigzagLoop,
  kArmchairLoop,
  kZigzagCapped,
  kArmchairCapped,
};

const char* to_string(StructureFamily family) noexcept;
StructureFamily parse_family(const std::string& name);
const std::vector<StructureFamily>& all_families();

// Member of a family whose natural start/target sets are `levels` apart:
// a cycle of 2 (levels - 1) nodes, a loop of levels - 1 repeats, or a capped
// tube with that many levels between its apices.
PortGraph build_family_member(StructureFamily family, int levels, int circumference = 6);

// Hadamard for the cycle, G3 for the carbon structures.
Coin family_default_coin(StructureFamily family);

struct SweepPoint {
  int levels = 0;
  std::optional<long> n_half;  // empty when the budget ran out
  double max_arrival = 0.0;
};

struct SweepResult {
  StructureFamily family{};
  std::vector<SweepPoint> points;
  FitResult fit;
  // Sizes left out of the fit because arrival never reached 50%.
  std::vector<int> excluded;
};

// Absorbing walk from the structure's anchor set to its antipodal set for each
// size, then a linear fit of N_0.5 against the level count. Runs sizes
// concurrently.
SweepResult scaling_sweep(StructureFamily family, std::span<const int> sizes, const Coin& coin,
                          long steps_budget);

// `structure,m,b,r2`
void write_fit_table(std::ostream& os, std::span<const SweepResult> results);
// `structure,levels,n_half` (n_half empty when not reached)
void write_sweep_points(std::ostream& os, std::span<const SweepResult> results);

}  // namespace qwalk
