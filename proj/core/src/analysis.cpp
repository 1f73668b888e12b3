#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "qwalk/builders.hpp"
#include "qwalk/error.hpp"
#include "qwalk/levels.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

long n_half(const TransportRecord& record, double threshold) {
  double best = 0.0;
  for (std::size_t t = 0; t < record.arrival.size(); ++t) {
    if (record.arrival[t] >= threshold) return static_cast<long>(t);
    best = std::max(best, record.arrival[t]);
  }
  throw NotReachedError(threshold, best);
}

double plateau_rise(std::span<const double> series, double tail_fraction) {
  if (series.size() < 2) throw_invalid("plateau needs at least 2 samples");
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0)) throw_invalid("tail fraction must lie in (0, 1)");
  const auto last = series.size() - 1;
  const auto start = static_cast<std::size_t>(std::floor(static_cast<double>(last) * (1.0 - tail_fraction)));
  const double peak = *std::max_element(series.begin() + static_cast<std::ptrdiff_t>(start), series.end());
  return peak - series[start];
}

FitResult linear_fit(std::span<const FitPoint> points) {
  std::set<double> xs;
  for (const auto& p : points) xs.insert(p.x);
  if (xs.size() < 2) throw_invalid("linear fit needs at least two distinct x values");

  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
  }
  FitResult fit;
  fit.m = sxy / sxx;
  fit.b = mean_y - fit.m * mean_x;
  fit.points.assign(points.begin(), points.end());

  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& p : points) {
    const double f = fit.m * p.x + fit.b;
    ss_res += (p.y - f) * (p.y - f);
    ss_tot += (p.y - mean_y) * (p.y - mean_y);
  }
  // All y equal: the horizontal line is exact.
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

const char* to_string(StructureFamily family) noexcept {
  switch (family) {
    case StructureFamily::kCycle: return "cycle";
    case StructureFamily::kZigzagLoop: return "loop-zigzag";
    case StructureFamily::kArmchairLoop: return "loop-armchair";
    case StructureFamily::kZigzagCapped: return "capped-zigzag";
    case StructureFamily::kArmchairCapped: return "capped-armchair";
  }
  return "cycle";
}

const std::vector<StructureFamily>& all_families() {
  static const std::vector<StructureFamily> families{
      StructureFamily::kCycle, StructureFamily::kZigzagLoop, StructureFamily::kArmchairLoop,
      StructureFamily::kZigzagCapped, StructureFamily::kArmchairCapped};
  return families;
}

StructureFamily parse_family(const std::string& name) {
  for (StructureFamily f : all_families())
    if (name == to_string(f)) return f;
  throw_invalid("unknown structure family '" + name +
                "' (expected cycle, loop-zigzag, loop-armchair, capped-zigzag or capped-armchair)");
}

PortGraph build_family_member(StructureFamily family, int levels, int circumference) {
  if (levels < 2) throw_invalid("a structure needs at least 2 levels, got " + std::to_string(levels));
  switch (family) {
    case StructureFamily::kCycle: return build_cycle(2 * (levels - 1));
    case StructureFamily::kZigzagLoop: return build_nanotube_loop(TubeKind::kZigzag, circumference, levels - 1);
    case StructureFamily::kArmchairLoop:
      return build_nanotube_loop(TubeKind::kArmchair, circumference, levels - 1);
    case StructureFamily::kZigzagCapped:
      return build_capped_nanotube(TubeKind::kZigzag, capped_tube_layers_for_levels(TubeKind::kZigzag, levels));
    case StructureFamily::kArmchairCapped:
      return build_capped_nanotube(TubeKind::kArmchair,
                                   capped_tube_layers_for_levels(TubeKind::kArmchair, levels));
  }
  throw_invalid("unknown structure family");
}

Coin family_default_coin(StructureFamily family) {
  return family == StructureFamily::kCycle ? hadamard() : grover(3);
}

SweepResult scaling_sweep(StructureFamily family, std::span<const int> sizes, const Coin& coin,
                          long steps_budget) {
  if (sizes.size() < 2) throw_invalid("a scaling sweep needs at least 2 sizes");
  if (steps_budget < 0) throw_invalid("step budget must be non-negative");
  SweepResult result;
  result.family = family;
  result.points.resize(sizes.size());
  // Build every graph up front so parameter errors surface before any run.
  std::vector<PortGraph> graphs;
  graphs.reserve(sizes.size());
  for (int levels : sizes) graphs.push_back(build_family_member(family, levels));

  parallel_for(sizes.size(), [&](std::size_t i) {
    const PortGraph& g = graphs[i];
    const LevelMap levels = compute_levels(g, g.metadata().anchor);
    if (levels.num_levels != sizes[i])
      throw std::logic_error("family member has " + std::to_string(levels.num_levels) + " levels, wanted " +
                             std::to_string(sizes[i]));
    const WalkState start = make_initial_state(g, levels.initial_set, coin.dim());
    const TransportRecord record = evolve_absorbing(start, g, coin, levels.target_set, levels, steps_budget);
    SweepPoint& point = result.points[i];
    point.levels = sizes[i];
    point.max_arrival = record.arrival.back();
    try {
      point.n_half = n_half(record);
    } catch (const NotReachedError&) {
      point.n_half.reset();
    }
  });

  std::vector<FitPoint> fit_points;
  for (const auto& p : result.points) {
    if (p.n_half) {
      fit_points.push_back({static_cast<double>(p.levels), static_cast<double>(*p.n_half)});
    } else {
      result.excluded.push_back(p.levels);
    }
  }
  result.fit = linear_fit(fit_points);
  return result;
}

void write_fit_table(std::ostream& os, std::span<const SweepResult> results) {
  os << "structure,m,b,r2\n";
  for (const auto& r : results)
    os << to_string(r.family) << ',' << format_double(r.fit.m) << ',' << format_double(r.fit.b) << ','
       << format_double(r.fit.r2) << '\n';
}

void write_sweep_points(std::ostream& os, std::span<const SweepResult> results) {
  os << "structure,levels,n_half\n";
  for (const auto& r : results) {
    for (const auto& p : r.points) {
      os << to_string(r.family) << ',' << p.levels << ',';
      if (p.n_half) os << *p.n_half;
      os << '\n';
    }
  }
}

}  // namespace qwalk
