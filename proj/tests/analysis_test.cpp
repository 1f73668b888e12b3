#include <gtest/gtest.h>

#include <sstream>

#include "qwalk/analysis.hpp"
#include "qwalk/builders.hpp"
#include "qwalk/error.hpp"
#include "qwalk/levels.hpp"

namespace qwalk {
namespace {

TransportRecord record_of(std::vector<double> arrival) {
  TransportRecord r;
  r.avg_level.assign(arrival.size(), 0.0);
  r.arrival = std::move(arrival);
  return r;
}

TEST(NHalf, FirstStepAtOrAboveThreshold) {
  EXPECT_EQ(n_half(record_of({0.0, 0.1, 0.3, 0.5, 0.7})), 3);
  EXPECT_EQ(n_half(record_of({0.0, 0.1, 0.49, 0.51})), 3);
  EXPECT_EQ(n_half(record_of({0.6})), 0);
  EXPECT_EQ(n_half(record_of({0.0, 0.2, 0.95}), 0.9), 2);
}

TEST(NHalf, ReportsBestArrivalWhenNotReached) {
  try {
    n_half(record_of({0.0, 0.1, 0.42}));
    FAIL();
  } catch (const NotReachedError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotReached);
    EXPECT_EQ(e.max_arrival(), 0.42);
  }
}

TEST(Plateau, TailGrowth) {
  // 11 samples: the tail starts at index 9.
  const std::vector<double> rising{0, .1, .2, .3, .4, .5, .6, .7, .8, .9, 1.0};
  EXPECT_NEAR(plateau_rise(rising), 0.1, 1e-15);
  const std::vector<double> flat(101, 0.95);
  EXPECT_EQ(plateau_rise(flat), 0.0);
  EXPECT_THROW(plateau_rise(std::vector<double>{1.0}), Error);
  EXPECT_THROW(plateau_rise(rising, 0.0), Error);
}

TEST(LinearFit, ExactLine) {
  const std::vector<FitPoint> pts{{10, 19}, {20, 39}, {30, 59}};
  const auto fit = linear_fit(pts);
  EXPECT_NEAR(fit.m, 2.0, 1e-12);
  EXPECT_NEAR(fit.b, -1.0, 1e-12);
  EXPECT_NEAR(fit.r2, 1.0, 1e-12);
  EXPECT_EQ(fit.points.size(), 3u);
}

TEST(LinearFit, ResidualsAreOrthogonalToDesign) {
  const std::vector<FitPoint> pts{{10, 19}, {14, 27}, {20, 41}, {30, 61}, {40, 83}};
  const auto fit = linear_fit(pts);
  double sum = 0, dot = 0;
  for (const auto& p : pts) {
    const double r = p.y - (fit.m * p.x + fit.b);
    sum += r;
    dot += r * p.x;
  }
  EXPECT_NEAR(sum, 0.0, 1e-9);
  EXPECT_NEAR(dot, 0.0, 1e-9);
  EXPECT_GT(fit.r2, 0.999);
  EXPECT_LT(fit.r2, 1.0);
}

TEST(LinearFit, HandComputedValues) {
  // x = 0,1,2  y = 0,2,1: m = 0.5, b = 0.5, SS_res = 1.5, SS_tot = 2.
  const std::vector<FitPoint> pts{{0, 0}, {1, 2}, {2, 1}};
  const auto fit = linear_fit(pts);
  EXPECT_NEAR(fit.m, 0.5, 1e-15);
  EXPECT_NEAR(fit.b, 0.5, 1e-15);
  EXPECT_NEAR(fit.r2, 0.25, 1e-15);
}

TEST(LinearFit, NeedsTwoDistinctAbscissae) {
  EXPECT_THROW(linear_fit(std::vector<FitPoint>{{1, 1}}), Error);
  EXPECT_THROW(linear_fit(std::vector<FitPoint>{{1, 1}, {1, 2}}), Error);
}

TEST(Families, NamesRoundTrip) {
  for (auto f : all_families()) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(all_families().size(), 5u);
  EXPECT_THROW(parse_family("torus"), Error);
}

TEST(Families, MembersHaveRequestedLevelCount) {
  for (auto f : all_families())
    for (int levels : {10, 14, 20, 30, 40}) {
      const auto g = build_family_member(f, levels);
      EXPECT_EQ(compute_levels(g, g.metadata().anchor).num_levels, levels) << to_string(f) << " " << levels;
    }
}

TEST(Families, DefaultCoins) {
  EXPECT_EQ(family_default_coin(StructureFamily::kCycle), hadamard());
  EXPECT_EQ(family_default_coin(StructureFamily::kArmchairCapped), grover(3));
}

// Frozen against tests/reference/numpy_reference.py.
struct FrozenSweep {
  StructureFamily family;
  std::vector<long> n_half;
};

class FrozenSweepTest : public ::testing::TestWithParam<FrozenSweep> {};

TEST_P(FrozenSweepTest, MatchesReferenceImplementation) {
  const auto& p = GetParam();
  const std::vector<int> sizes{10, 14, 20, 30, 40};
  const auto result = scaling_sweep(p.family, sizes, family_default_coin(p.family), 2000);
  ASSERT_EQ(result.points.size(), sizes.size());
  EXPECT_TRUE(result.excluded.empty());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    EXPECT_EQ(result.points[i].levels, sizes[i]);
    ASSERT_TRUE(result.points[i].n_half.has_value());
    EXPECT_EQ(*result.points[i].n_half, p.n_half[i]) << sizes[i];
    EXPECT_GE(result.points[i].max_arrival, 0.5);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Families, FrozenSweepTest,
    ::testing::Values(FrozenSweep{StructureFamily::kCycle, {19, 27, 41, 61, 83}},
                      FrozenSweep{StructureFamily::kZigzagLoop, {11, 15, 21, 33, 43}},
                      FrozenSweep{StructureFamily::kArmchairLoop, {12, 18, 27, 41, 55}},
                      FrozenSweep{StructureFamily::kZigzagCapped, {11, 16, 22, 34, 47}},
                      FrozenSweep{StructureFamily::kArmchairCapped, {12, 17, 25, 38, 52}}),
    [](const auto& info) {
      std::string s = to_string(info.param.family);
      std::replace(s.begin(), s.end(), '-', '_');
      return s;
    });

TEST(Sweep, ExcludesSizesThatRunOutOfBudget) {
  const std::vector<int> sizes{10, 14, 20};
  const auto r = scaling_sweep(StructureFamily::kCycle, sizes, hadamard(), 30);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(*r.points[0].n_half, 19);
  EXPECT_EQ(*r.points[1].n_half, 27);
  EXPECT_FALSE(r.points[2].n_half.has_value());
  EXPECT_EQ(r.excluded, std::vector<int>{20});
  EXPECT_NEAR(r.fit.m, 2.0, 1e-12);
}

TEST(Sweep, TooFewReachedSizesIsAnError) {
  const std::vector<int> sizes{20, 30};
  EXPECT_THROW(scaling_sweep(StructureFamily::kCycle, sizes, hadamard(), 30), Error);
}

TEST(Sweep, TablesUseExpectedSchemas) {
  SweepResult r;
  r.family = StructureFamily::kZigzagLoop;
  r.points = {{10, 11, 0.9}, {14, std::nullopt, 0.4}};
  r.fit = {1.5, -0.25, 0.99, {}};
  std::vector<SweepResult> all{r};
  std::ostringstream fits, points;
  write_fit_table(fits, all);
  write_sweep_points(points, all);
  EXPECT_EQ(fits.str(), "structure,m,b,r2\nloop-zigzag,1.5,-0.25,0.99\n");
  EXPECT_EQ(points.str(), "structure,levels,n_half\nloop-zigzag,10,11\nloop-zigzag,14,\n");
}

}  // namespace
}  // namespace qwalk
