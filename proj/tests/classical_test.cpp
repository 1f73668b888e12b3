#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "qwalk/builders.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/levels.hpp"
#include "support/oracles.hpp"

namespace qwalk {
namespace {

std::vector<NodeId> single(NodeId v) { return {v}; }

TEST(ClassicalStep, TwoSidedSplitsOverNeighbours) {
  const auto g = build_cycle(18);
  const auto s = classical_step(point_distribution(g, single(0)), g, false);
  EXPECT_EQ(s.probabilities[1], 0.5);
  EXPECT_EQ(s.probabilities[17], 0.5);
  EXPECT_EQ(s.probabilities[0], 0.0);
  EXPECT_EQ(s.t, 1);
}

TEST(ClassicalStep, ThreeSidedKeepsAThird) {
  const auto g = build_cycle(18);
  const auto s = classical_step(point_distribution(g, single(0)), g, true);
  for (NodeId v : {0u, 1u, 17u}) EXPECT_NEAR(s.probabilities[v], 1.0 / 3, 1e-16);
}

TEST(ClassicalStep, UniformIsStationary) {
  for (const auto& g : {build_c60(), build_cycle(9), build_nanotube_loop(TubeKind::kZigzag, 6, 4)}) {
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), 0u);
    const auto u = point_distribution(g, all);
    for (bool stay : {false, true}) {
      const auto s = classical_step(u, g, stay);
      for (std::size_t v = 0; v < all.size(); ++v) EXPECT_NEAR(s.probabilities[v], u.probabilities[v], 1e-16);
    }
  }
}

TEST(ClassicalStep, EvenCycleAlternatesParity) {
  const auto g = build_cycle(18);
  auto s = point_distribution(g, single(0));
  for (int t = 1; t <= 40; ++t) {
    s = classical_step(s, g, false);
    for (NodeId v = 0; v < 18; ++v) {
      if (static_cast<int>(v % 2) != t % 2) {
        ASSERT_EQ(s.probabilities[v], 0.0) << t;
      }
    }
    ASSERT_NEAR(s.total(), 1.0, 1e-12);
  }
}

TEST(ClassicalAbsorbing, CycleConvergesToUnity) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  const auto rec =
      classical_evolve_absorbing(point_distribution(g, single(0)), g, levels.target_set, false, levels, 1200);
  EXPECT_EQ(rec.coin, "classical-2-sided");
  EXPECT_GE(rec.arrival[1200], 0.999);
  for (std::size_t t = 1; t < rec.arrival.size(); ++t) EXPECT_GE(rec.arrival[t], rec.arrival[t - 1]);
}

TEST(ClassicalAbsorbing, StartOnTarget) {
  const auto g = build_c60();
  const auto levels = compute_levels(g, single(0));
  const auto rec = classical_evolve_absorbing(point_distribution(g, single(0)), g, single(0), true, levels, 3);
  EXPECT_EQ(rec.coin, "classical-4-sided");
  for (double a : rec.arrival) EXPECT_NEAR(a, 1.0, 1e-15);
}

TEST(ClassicalAbsorbing, ConservationWithBookkeeping) {
  const auto g = build_capped_nanotube(TubeKind::kZigzag, 6);
  const auto levels = compute_levels(g, g.metadata().anchor);
  auto s = point_distribution(g, levels.initial_set);
  for (int t = 0; t < 500; ++t) {
    s = classical_step(s, g, t % 2 == 0);
    double moved = 0;
    for (NodeId v : levels.target_set) {
      moved += s.probabilities[v];
      s.probabilities[v] = 0;
    }
    s.absorbed += moved;
    ASSERT_NEAR(s.total() + s.absorbed, 1.0, 1e-12);
  }
}

TEST(ClassicalAbsorbing, AgreesWithMonteCarloSampler) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  const auto exact =
      classical_evolve_absorbing(point_distribution(g, single(0)), g, levels.target_set, false, levels, 100);
  const long n = 1'000'000;
  const double sampled =
      oracle::sampled_classical_arrival(oracle::neighbours(g), 0, levels.target_set, 100, n, 20240601);
  const double p = exact.arrival[100];
  const double sigma = std::sqrt(p * (1 - p) / n);
  EXPECT_LT(std::abs(sampled - p), 3 * sigma) << "exact " << p << " sampled " << sampled;
}

}  // namespace
}  // namespace qwalk
