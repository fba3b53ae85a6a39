#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hsr/region_tree.hpp"

namespace hsr {
namespace {

std::vector<Strip> collect(RegionTree& t, auto&& action) {
  std::vector<Strip> out;
  action([&](const Strip& s) { out.push_back(s); });
  return out;
}

std::vector<std::int64_t> keys(const RegionTree& t) {
  std::vector<std::int64_t> out;
  for (auto f = t.begin(); f != t.end(); ++f) out.push_back(f->first);
  return out;
}

TEST(RegionTree, EmptyTreeLocatesSentinel) {
  RegionTree t;
  auto [p, q] = t.locate_range(3, 8);
  EXPECT_EQ(p, t.sentinel());
  EXPECT_EQ(q, t.sentinel());
  EXPECT_EQ(t.report_between(p, q, 5, 3, 8, nullptr), 0u);
}

TEST(RegionTree, LocateUsesPredecessors) {
  RegionTree t;
  for (std::int64_t y : {2, 5, 9}) t.insert_edge(y, 1, 0);
  auto [p, q] = t.locate_range(3, 8);
  EXPECT_EQ(p->first, 2);
  EXPECT_EQ(q->first, 5);
  // Far ranges take the search path rather than the short walk.
  for (std::int64_t y = 20; y < 40; ++y) t.insert_edge(y, static_cast<Layer>(y % 2), 0);
  auto [p2, q2] = t.locate_range(3, 38);
  EXPECT_EQ(p2->first, 2);
  EXPECT_EQ(q2->first, 37);
}

TEST(RegionTree, ReportBetweenReadsFields) {
  RegionTree t;
  auto f = t.insert_edge(2, 4, 0);
  t.insert_edge(9, kBackgroundLayer, 0);
  const auto got = collect(t, [&](auto sink) { t.report_between(f, f, 7, 2, 9, sink); });
  EXPECT_EQ(got, (std::vector<Strip>{{4, 0, 7, 2, 9}}));
}

TEST(RegionTree, RemoveRange) {
  RegionTree t;
  std::vector<RegionTree::Leaf> leaves;
  for (std::int64_t y = 1; y <= 6; ++y) leaves.push_back(t.insert_edge(y, static_cast<Layer>(y), 0));
  t.remove_range(leaves[0], leaves[1]);
  EXPECT_EQ(t.size(), 7u);
  t.remove_range(leaves[1], leaves[5]);
  EXPECT_EQ(keys(t), (std::vector<std::int64_t>{RegionTree::kSentinelY, 1, 2, 6}));
}

TEST(RegionTree, DuplicateInsertIsAnInternalError) {
  RegionTree t;
  t.insert_edge(3, 1, 0);
  EXPECT_THROW(t.insert_edge(3, 2, 0), TreeInternalError);
}

TEST(RegionTree, SetRegion) {
  RegionTree t;
  auto f = t.insert_edge(1, 5, 2);
  t.insert_edge(4, kBackgroundLayer, 2);
  auto none = collect(t, [&](auto sink) { t.set_region(f, 5, 9, sink); });
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(f->second.x_start, 2);
  auto one = collect(t, [&](auto sink) { t.set_region(f, 6, 9, sink); });
  EXPECT_EQ(one, (std::vector<Strip>{{5, 2, 9, 1, 4}}));
  // Zero width change: nothing emitted, fields still move.
  auto zero = collect(t, [&](auto sink) { t.set_region(f, 7, 9, sink); });
  EXPECT_TRUE(zero.empty());
  EXPECT_EQ(f->second.region, 7);
}

TEST(RegionTree, RepaintWithSameOwnerIsAnInternalError) {
  RegionTree t;
  t.paint(0, 10, 3, 1, nullptr);
  EXPECT_THROW(t.paint(2, 4, 3, 5, nullptr), TreeInternalError);
  EXPECT_NO_THROW(t.paint(10, 12, 3, 5, nullptr));  // touching is a merge
}

TEST(RegionTree, MergeWithEarlierNeighbourEmitsItFirst) {
  RegionTree t;
  t.paint(0, 5, 1, 0, nullptr);
  const auto got = collect(t, [&](auto sink) { t.paint(5, 8, 1, 3, sink); });
  EXPECT_EQ(got, (std::vector<Strip>{{1, 0, 3, 0, 5}}));
  EXPECT_EQ(keys(t), (std::vector<std::int64_t>{RegionTree::kSentinelY, 0, 8}));
  EXPECT_EQ(t.begin()->second.region, kBackgroundLayer);
  EXPECT_EQ(std::next(t.begin())->second.x_start, 3);
}

TEST(RegionTree, BackgroundStripsOnlyWhenAskedAndBounded) {
  for (bool report : {false, true}) {
    RegionTree t(report);
    t.paint(0, 2, 1, 0, nullptr);
    t.paint(4, 6, 2, 0, nullptr);
    std::vector<Strip> out;
    t.flush(3, [&](const Strip& s) { out.push_back(s); });
    std::size_t background = 0;
    for (const Strip& s : out) background += s.owner == kBackgroundLayer;
    EXPECT_EQ(background, report ? 1u : 0u);
  }
}

// Random paints against a cell model: the emitted strips and the final flush
// must tile exactly the painted cells, and the leaves must be the model's
// owner changes.
TEST(RegionTree, RandomPaintsMatchCellModel) {
  std::mt19937_64 rng(41);
  constexpr int kY = 24;
  constexpr int kX = 30;
  for (int trial = 0; trial < 300; ++trial) {
    RegionTree t;
    std::vector<Layer> now(kY, kBackgroundLayer);
    std::vector<std::vector<Layer>> history(kX, std::vector<Layer>(kY, kBackgroundLayer));
    std::map<std::pair<int, int>, Layer> painted;  // (x, y) cell -> owner seen in strips
    bool overlap = false;
    auto sink = [&](const Strip& s) {
      for (std::int64_t x = s.x_start; x < s.x_end; ++x) {
        for (std::int64_t y = s.y_low; y < s.y_high; ++y) {
          overlap |= !painted.emplace(std::pair{int(x), int(y)}, s.owner).second;
        }
      }
    };
    Layer fresh = 0;
    for (int x = 0; x < kX; ++x) {
      const int paints = static_cast<int>(rng() % 3);
      for (int p = 0; p < paints; ++p) {
        int a = static_cast<int>(rng() % kY), b = static_cast<int>(rng() % kY);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        Layer owner = rng() % 4 == 0 ? kBackgroundLayer : static_cast<Layer>(rng() % 5);
        if (std::any_of(now.begin() + a, now.begin() + b, [&](Layer l) { return l == owner; })) {
          owner = 100 + fresh++;
        }
        t.paint(a, b, owner, x, sink);
        std::fill(now.begin() + a, now.begin() + b, owner);
      }
      history[static_cast<std::size_t>(x)] = now;
      std::vector<std::int64_t> changes{RegionTree::kSentinelY};
      for (int y = 0; y <= kY; ++y) {
        const Layer below = y == 0 ? kBackgroundLayer : now[static_cast<std::size_t>(y - 1)];
        const Layer above = y == kY ? kBackgroundLayer : now[static_cast<std::size_t>(y)];
        if (below != above) changes.push_back(y);
      }
      ASSERT_EQ(keys(t), changes) << "trial " << trial << " x " << x;
    }
    t.flush(kX, sink);
    ASSERT_FALSE(overlap);
    for (int x = 0; x < kX; ++x) {
      for (int y = 0; y < kY; ++y) {
        const Layer want = history[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        const auto it = painted.find({x, y});
        if (want == kBackgroundLayer) {
          EXPECT_TRUE(it == painted.end());
        } else {
          ASSERT_TRUE(it != painted.end());
          EXPECT_EQ(it->second, want);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hsr
