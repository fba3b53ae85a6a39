#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hsr/generate.hpp"
#include "hsr/oracle.hpp"
#include "hsr/sweep.hpp"
#include "support.hpp"

namespace hsr {
namespace {

// Maps raw coordinates to the ranks canonicalize() assigns (general position).
struct Ranks {
  explicit Ranks(const Scene& s) {
    for (const Rect& r : s.rects()) {
      xs.insert(xs.end(), {r.x1, r.x2});
      ys.insert(ys.end(), {r.y1, r.y2});
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
  }
  std::int64_t x(double v) const { return std::lower_bound(xs.begin(), xs.end(), v) - xs.begin(); }
  std::int64_t y(double v) const { return std::lower_bound(ys.begin(), ys.end(), v) - ys.begin(); }
  VisibleRegion region(RectId owner, double x0, double x1, double y0, double y1) const {
    return {owner, x(x0), x(x1), y(y0), y(y1)};
  }
  std::vector<double> xs, ys;
};

std::vector<VisibleRegion> sorted(std::vector<VisibleRegion> v) {
  std::sort(v.begin(), v.end(), [](const VisibleRegion& a, const VisibleRegion& b) {
    return std::tie(a.x_end, a.y_low, a.owner, a.x_start, a.y_high) <
           std::tie(b.x_end, b.y_low, b.owner, b.x_start, b.y_high);
  });
  return v;
}

std::vector<VisibleRegion> ending_at(const std::vector<VisibleRegion>& all, std::int64_t x) {
  std::vector<VisibleRegion> out;
  for (const VisibleRegion& r : all) {
    if (r.x_end == x) out.push_back(r);
  }
  return sorted(out);
}

TEST(Sweep, EmptyScene) {
  const SweepResult r = run(Scene());
  EXPECT_TRUE(r.regions.empty());
  EXPECT_EQ(r.counters.k, 0u);
}

TEST(Sweep, OneRectangleIsOneRegion) {
  const Scene s = canonicalize(Scene({{42, 1.5, 3, -2, 7, 0.25}}));
  const SweepResult r = run(s);
  EXPECT_EQ(r.regions, (std::vector<VisibleRegion>{{42, 0, 1, 0, 1}}));
  EXPECT_EQ(r.counters.k, 1u);
}

TEST(Sweep, RequiresCanonicalScene) {
  EXPECT_THROW(run(Scene({{1, 0.5, 3, 0, 1, 0}})), std::invalid_argument);
  EXPECT_THROW(run(Scene({{1, 0, 1, 0, 1, 0}, {2, 0, 1, 0, 1, 1}})), InvalidScene);
}

TEST(Sweep, HiddenRectangleProducesNothing) {
  const Scene s = canonicalize(Scene({{1, 0, 10, 0, 10, 5}, {2, 2, 8, 2, 8, 1}}));
  const SweepResult r = run(s);
  ASSERT_EQ(r.regions.size(), 1u);
  EXPECT_EQ(r.regions[0].owner, 1);
}

// F enters between A's lower edge and D's upper edge, with G partly visible
// under it: the left edge reports the pieces of A and G that F now hides.
TEST(Sweep, LeftEdgeReportsTheStripsItCovers) {
  const Scene raw({{'A', 0, 90, 0, 95, 1},
                   {'G', 10, 91, 30, 80, 2},
                   {'D', 20, 92, 50, 70, 4},
                   {'F', 30, 93, 10, 60, 3}});
  const Ranks k(raw);
  const SweepResult r = run(canonicalize(raw));
  EXPECT_EQ(ending_at(r.regions, k.x(30)),
            sorted({k.region('A', 0, 30, 10, 30), k.region('G', 10, 30, 30, 50)}));
  EXPECT_TRUE(verify(canonicalize(raw), r.regions).ok);
}

// F leaves from under D; C and G are revealed below D, and A is revealed
// just above its own strip, which therefore ends and restarts at F's right
// edge.
TEST(Sweep, RightEdgeRevealsLowerRectangles) {
  const Scene raw({{'A', 0, 100, 0, 95, 1},
                   {'G', 1, 101, 20, 70, 2},
                   {'C', 2, 102, 40, 75, 3},
                   {'D', 3, 103, 50, 90, 5},
                   {'F', 4, 50, 10, 60, 4}});
  const Ranks k(raw);
  const SweepResult r = run(canonicalize(raw));
  EXPECT_EQ(ending_at(r.regions, k.x(50)),
            sorted({k.region('F', 4, 50, 10, 50), k.region('A', 0, 50, 0, 10)}));
  std::vector<VisibleRegion> restarted;
  for (const VisibleRegion& v : r.regions) {
    if (v.x_start == k.x(50)) restarted.push_back(v);
  }
  EXPECT_EQ(sorted(restarted),
            sorted({k.region('A', 50, 100, 0, 20), k.region('G', 50, 101, 20, 40),
                    k.region('C', 50, 102, 40, 50)}));
  EXPECT_TRUE(verify(canonicalize(raw), r.regions).ok);
}

TEST(Sweep, LastRectangleLeavingReportsItsFace) {
  const Scene raw({{1, 0, 10, 0, 10, 1}, {2, 2, 4, 2, 4, 2}});
  const SweepResult r = run(canonicalize(raw));
  const Ranks k(raw);
  // Rect 2 punches a hole; after it leaves, rect 1's strips all end at x=10.
  for (const VisibleRegion& v : ending_at(r.regions, k.x(10))) EXPECT_EQ(v.owner, 1);
  EXPECT_TRUE(verify(canonicalize(raw), r.regions).ok);
}

TEST(Sweep, RandomScenesMatchOracleWithDebugChecks) {
  std::mt19937_64 rng(101);
  SweepOptions options;
  options.debug_checks = true;
  for (int trial = 0; trial < 400; ++trial) {
    const Scene s = test::random_scene(1 + rng() % 16, rng);
    const Verdict v = test::sweep_and_verify(s, options);
    ASSERT_TRUE(v.ok) << "trial " << trial << ": " << v.message;
  }
}

TEST(Sweep, SlabSizeDoesNotChangeTheAnswer) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Scene s = canonicalize(test::random_scene(2 + rng() % 30, rng));
    const auto reference = coalesce(run(s).regions);
    for (std::size_t size : {1, 2, 3, 5, 64}) {
      SweepOptions options;
      options.slab_size = size;
      options.debug_checks = true;
      const SweepResult r = run(s, options);
      ASSERT_TRUE(verify(s, r.regions).ok);
      EXPECT_EQ(coalesce(r.regions), reference);
    }
  }
}

TEST(Sweep, GeneratedScenes) {
  for (SceneKind kind : {SceneKind::Uniform, SceneKind::Nested, SceneKind::GridStress}) {
    for (std::size_t n : {2, 8, 20, 48}) {
      const Scene s = canonicalize(generate(kind, n, n));
      SweepOptions options;
      options.debug_checks = true;
      const Verdict v = verify(s, run(s, options).regions);
      EXPECT_TRUE(v.ok) << to_string(kind) << " n=" << n << ": " << v.message;
    }
  }
}

TEST(Sweep, OutputIsStreamedInSweepOrder) {
  std::mt19937_64 rng(8);
  const Scene s = canonicalize(test::random_scene(40, rng));
  const SweepResult r = run(s);
  EXPECT_TRUE(std::is_sorted(r.regions.begin(), r.regions.end(),
                             [](const auto& a, const auto& b) { return a.x_end < b.x_end; }));
  EXPECT_EQ(r.counters.k, r.regions.size());
  EXPECT_GT(r.counters.node_visits, 0u);
  EXPECT_GT(r.counters.peak_live_entries, 0u);
}

TEST(Sweep, BackgroundRegionsAreBoundedAndCorrect) {
  std::mt19937_64 rng(12);
  SweepOptions options;
  options.report_background = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Scene s = canonicalize(test::random_scene(1 + rng() % 12, rng));
    const SweepResult r = run(s, options);
    ASSERT_TRUE(verify(s, r.regions).ok);
    std::size_t background = 0;
    for (const VisibleRegion& v : r.regions) background += v.owner == kBackgroundId;
    EXPECT_EQ(background, r.counters.background_regions);
    EXPECT_EQ(r.regions.size() - background, r.counters.k);
  }
}

TEST(Sweep, CoalesceMergesAbuttingPieces) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Scene s = canonicalize(test::random_scene(1 + rng() % 12, rng));
    const auto regions = run(s).regions;
    const auto merged = coalesce(regions);
    EXPECT_LE(merged.size(), regions.size());
    ASSERT_TRUE(verify(s, merged).ok);
    for (const auto& a : merged) {
      for (const auto& b : merged) {
        EXPECT_FALSE(a.owner == b.owner && a.y_low == b.y_low && a.y_high == b.y_high &&
                     a.x_end == b.x_start);
      }
    }
  }
}

TEST(Sweep, EveryGuardFaultIsCaught) {
  for (GuardFault fault : kAllGuardFaults) {
    std::mt19937_64 rng(1);
    bool caught = false;
    for (int trial = 0; trial < 2000 && !caught; ++trial) {
      const Scene s = canonicalize(test::random_scene(1 + trial % 12, rng));
      SweepOptions options;
      options.fault = fault;
      try {
        caught = !verify(s, run(s, options).regions).ok;
      } catch (const TreeInternalError&) {
        caught = true;
      }
    }
    EXPECT_TRUE(caught) << to_string(fault);
  }
}

}  // namespace
}  // namespace hsr
