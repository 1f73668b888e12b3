#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qwalk/builders.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/error.hpp"
#include "qwalk/faces.hpp"
#include "qwalk/levels.hpp"
#include "qwalk/walk.hpp"
#include "support/oracles.hpp"

namespace qwalk {
namespace {

std::vector<NodeId> single(NodeId v) { return {v}; }

WalkState random_state(std::size_t nodes, std::size_t cdim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  WalkState s;
  s.cdim = cdim;
  s.amplitudes.resize(nodes * cdim);
  double norm = 0;
  for (auto& a : s.amplitudes) {
    a = {n(rng), n(rng)};
    norm += std::norm(a);
  }
  for (auto& a : s.amplitudes) a /= std::sqrt(norm);
  return s;
}

TEST(InitialState, SingleNodeOnCycle) {
  const auto g = build_cycle(18);
  const auto s = make_initial_state(g, single(0), 2);
  EXPECT_EQ(s.at(0, 0), Complex(1 / std::sqrt(2.0), 0));
  EXPECT_EQ(s.at(0, 1), Complex(1 / std::sqrt(2.0), 0));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  EXPECT_EQ(s.absorbed, 0.0);
  EXPECT_EQ(s.t, 0);
}

TEST(InitialState, HexagonFaceOnC60) {
  const auto g = build_c60();
  const auto faces = trace_faces(g);
  const auto hex = std::find_if(faces.begin(), faces.end(), [](const Face& f) { return f.size() == 6; });
  const auto s = make_initial_state(g, hex->nodes(), 3);
  int populated = 0;
  for (const auto& a : s.amplitudes)
    if (a != Complex{}) {
      ++populated;
      EXPECT_NEAR(a.real(), 1 / std::sqrt(18.0), 1e-15);
    }
  EXPECT_EQ(populated, 18);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
}

TEST(InitialState, RejectsBadInput) {
  const auto g = build_cycle(6);
  EXPECT_THROW(make_initial_state(g, std::vector<NodeId>{}, 2), Error);
  EXPECT_THROW(make_initial_state(g, single(0), 4), Error);
  EXPECT_THROW(make_initial_state(g, single(6), 2), Error);
}

TEST(Shift, FollowsEdgeLabels) {
  const auto g = build_cycle(18);
  WalkState s;
  s.cdim = 2;
  s.amplitudes.assign(36, 0.0);
  s.at(0, 1) = 1;
  const auto out = shift(s, g);
  EXPECT_EQ(out.at(1, 0), Complex(1, 0));
  EXPECT_NEAR(out.norm_squared(), 1.0, 0);
}

TEST(Shift, IsAnInvolutionAndKeepsWaitPort) {
  for (const auto& g : {build_c60(), build_nanotube_loop(TubeKind::kArmchair, 5, 4), build_cycle(7)})
    for (std::size_t extra : {0u, 1u}) {
      const auto s = random_state(g.node_count(), g.degree() + extra, 7);
      const auto once = shift(s, g);
      if (extra) {
        for (NodeId u = 0; u < g.node_count(); ++u) EXPECT_EQ(once.at(u, g.degree()), s.at(u, g.degree()));
      }
      EXPECT_EQ(shift(once, g).amplitudes, s.amplitudes);
    }
}

TEST(Step, HadamardFromNodeZeroMovesLeft) {
  const auto g = build_cycle(18);
  const auto s = step(make_initial_state(g, single(0), 2), g, hadamard());
  EXPECT_EQ(s.t, 1);
  for (NodeId j = 0; j < 18; ++j)
    for (std::size_t c = 0; c < 2; ++c) {
      const double expected = (j == 17 && c == 1) ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(s.at(j, c)), expected, 1e-15);
    }
}

TEST(Step, RejectsDimensionMismatch) {
  const auto g = build_cycle(6);
  EXPECT_THROW(step(make_initial_state(g, single(0), 2), g, grover(3)), Error);
  Walker w(g, grover(3));
  auto s = make_initial_state(g, single(0), 2);
  EXPECT_THROW(w.advance(s), Error);
}

TEST(Step, PreservesNorm) {
  const auto g = build_c60();
  for (const auto& coin : {grover(3), fourier(3), grover(4), fourier(4), tensor(hadamard(), hadamard())}) {
    auto s = random_state(60, coin.dim(), 11);
    for (int t = 0; t < 200; ++t) {
      s = step(s, g, coin);
      ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
  }
}

void expect_matches_dense_oracle(const PortGraph& g, const Coin& coin, int steps) {
  const auto m = oracle::dense_step_matrix(g, coin);
  const auto s0 = random_state(g.node_count(), coin.dim(), 3);
  std::vector<std::complex<double>> ref(s0.amplitudes.begin(), s0.amplitudes.end());
  Walker w(g, coin);
  auto s = s0;
  for (int t = 1; t <= steps; ++t) {
    ref = oracle::apply(m, ref);
    w.advance(s);
    for (std::size_t k = 0; k < ref.size(); ++k) ASSERT_LT(std::abs(ref[k] - s.amplitudes[k]), 1e-10) << t;
  }
}

TEST(Step, MatchesDenseOracleOnSmallGraphs) {
  expect_matches_dense_oracle(build_cycle(4), hadamard(), 50);
  expect_matches_dense_oracle(build_cycle(7), hadamard_symmetric(), 50);
  expect_matches_dense_oracle(build_cycle(5), grover(3), 50);
  expect_matches_dense_oracle(build_cycle(16), fourier(3), 50);
  const auto k4 = from_adjacency({{1, 2, 3}, {0, 3, 2}, {3, 0, 1}, {2, 1, 0}});
  expect_matches_dense_oracle(k4, grover(3), 50);
  expect_matches_dense_oracle(k4, fourier(4), 50);
  expect_matches_dense_oracle(k4, tensor(hadamard(), hadamard()), 50);
}

TEST(Step, CycleFourFromSymmetricStartMatchesOracle) {
  const auto g = build_cycle(4);
  const auto m = oracle::dense_step_matrix(g, hadamard());
  auto s = make_initial_state(g, single(0), 2);
  std::vector<std::complex<double>> ref(s.amplitudes.begin(), s.amplitudes.end());
  for (int t = 0; t < 10; ++t) {
    s = step(s, g, hadamard());
    ref = oracle::apply(m, ref);
  }
  for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_LT(std::abs(ref[k] - s.amplitudes[k]), 1e-12);
}

TEST(AverageLevel, UniformCycleIsFourAndAHalf) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  std::vector<NodeId> all(18);
  std::iota(all.begin(), all.end(), 0u);
  const auto s = make_initial_state(g, all, 2);
  EXPECT_NEAR(average_level(s, levels), 4.5, 1e-14);
}

TEST(Unitary, CycleAverageLevelStartsAtZeroAndOscillatesAboutMidpoint) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  const auto rec = evolve_unitary(make_initial_state(g, single(0), 2), g, hadamard(), levels, 4000);
  EXPECT_EQ(rec.mode, EvolutionMode::kUnitary);
  EXPECT_EQ(rec.avg_level[0], 0.0);
  ASSERT_EQ(rec.steps(), 4000u);
  double mean = 0, above = 0, below = 0;
  for (std::size_t t = 2000; t <= 4000; ++t) {
    mean += rec.avg_level[t];
    (rec.avg_level[t] > 4.5 ? above : below) += 1;
  }
  mean /= 2001;
  EXPECT_NEAR(mean, 4.5, 0.25);
  EXPECT_GT(above, 100);
  EXPECT_GT(below, 100);
}

TEST(Absorbing, StartOffTargetGivesZeroInitialArrival) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  const auto rec = evolve_absorbing(make_initial_state(g, single(0), 2), g, hadamard(), levels.target_set,
                                    levels, 100);
  EXPECT_EQ(rec.arrival[0], 0.0);
  EXPECT_EQ(rec.arrival.size(), 101u);
  for (std::size_t t = 1; t < rec.arrival.size(); ++t) EXPECT_GE(rec.arrival[t], rec.arrival[t - 1]);
  // Ballistic front: nothing arrives before the distance is walked.
  for (std::size_t t = 0; t < 9; ++t) EXPECT_EQ(rec.arrival[t], 0.0);
  EXPECT_GT(rec.arrival[9], 0.0);
}

TEST(Absorbing, StartOnTargetIsAbsorbedImmediately) {
  const auto g = build_cycle(6);
  const auto levels = compute_levels(g, single(0));
  const auto rec = evolve_absorbing(make_initial_state(g, single(0), 2), g, hadamard(), single(0), levels, 5);
  for (double a : rec.arrival) EXPECT_NEAR(a, 1.0, 1e-15);
}

TEST(Absorbing, BookkeepingIdentityAndLevelRange) {
  const auto g = build_capped_nanotube(TubeKind::kArmchair, 6);
  const auto levels = compute_levels(g, g.metadata().anchor);
  Walker w(g, grover(3));
  auto s = make_initial_state(g, levels.initial_set, 3);
  for (int t = 0; t < 3000; ++t) {
    Walker::absorb(s, levels.target_set);
    ASSERT_NEAR(s.norm_squared() + s.absorbed, 1.0, 1e-9);
    const double x = average_level(s, levels);
    ASSERT_GE(x, 0.0);
    ASSERT_LE(x, levels.num_levels - 1);
    w.advance(s);
  }
}

TEST(Absorbing, RejectsNegativeSteps) {
  const auto g = build_cycle(6);
  const auto levels = compute_levels(g, single(0));
  EXPECT_THROW(evolve_absorbing(make_initial_state(g, single(0), 2), g, hadamard(), levels.target_set, levels, -1),
               Error);
  EXPECT_THROW(evolve_unitary(make_initial_state(g, single(0), 2), g, hadamard(), levels, -1), Error);
}

TEST(Absorbing, IsBitIdenticalAcrossRuns) {
  const auto g = build_c60();
  const auto levels = compute_levels(g, single(0));
  auto run = [&] {
    return evolve_absorbing(make_initial_state(g, single(0), 3), g, fourier(3), levels.target_set, levels, 500);
  };
  const auto a = run();
  const auto b = run();
  EXPECT_EQ(a.arrival, b.arrival);
  EXPECT_EQ(a.avg_level, b.avg_level);
}

TEST(Absorbing, WaitPortWalkStaysConsistent) {
  const auto g = build_c60();
  const auto levels = compute_levels(g, single(0));
  const auto rec =
      evolve_absorbing(make_initial_state(g, single(0), 4), g, grover(4), levels.target_set, levels, 700);
  EXPECT_GT(rec.arrival.back(), 0.5);
  EXPECT_LE(rec.arrival.back(), 1.0 + 1e-12);
}

TEST(Absorbing, HadamardCycleRisesSteeplyAboveClassical) {
  const auto g = build_cycle(18);
  const auto levels = compute_levels(g, single(0));
  const auto q = evolve_absorbing(make_initial_state(g, single(0), 2), g, hadamard(), levels.target_set, levels,
                                  1200);
  const auto c = classical_evolve_absorbing(point_distribution(g, single(0)), g, levels.target_set, false, levels,
                                            1200);
  EXPECT_GT(q.arrival[20], c.arrival[20]);
  EXPECT_GT(q.arrival[20], 0.3);
  EXPECT_GT(q.arrival[1200], 0.99);
  EXPECT_GE(c.arrival[1200], 0.999);
}

}  // namespace
}  // namespace qwalk
