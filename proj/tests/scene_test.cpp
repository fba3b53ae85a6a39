#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hsr/oracle.hpp"
#include "hsr/scene.hpp"
#include "support.hpp"

namespace hsr {
namespace {

bool has(const ValidationReport& r, ViolationKind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

TEST(Validate, SingleRectangleIsValid) {
  EXPECT_TRUE(validate(Scene({{1, 0, 10, 0, 10, 1}})).ok());
}

TEST(Validate, SharedX1IsReported) {
  const ValidationReport r = validate(Scene({{1, 0, 10, 0, 10, 1}, {2, 0, 5, 20, 30, 2}}));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has(r, ViolationKind::DuplicateX));
  EXPECT_NE(r.summary().find("duplicate x coordinate"), std::string::npos);
}

TEST(Validate, EmptyExtentsAreReported) {
  const ValidationReport r = validate(Scene({{1, 3, 3, 0, 10, 1}}));
  EXPECT_TRUE(has(r, ViolationKind::EmptyXExtent));
  EXPECT_NE(r.summary().find("empty x-extent"), std::string::npos);
  EXPECT_TRUE(has(validate(Scene({{1, 0, 1, 4, 2, 1}})), ViolationKind::EmptyYExtent));
}

TEST(Validate, IdsAndHeights) {
  EXPECT_TRUE(has(validate(Scene({{1, 0, 1, 2, 3, 1}, {1, 4, 5, 6, 7, 2}})),
                  ViolationKind::DuplicateId));
  EXPECT_TRUE(has(validate(Scene({{kBackgroundId, 0, 1, 2, 3, 1}})), ViolationKind::ReservedId));
  EXPECT_TRUE(has(validate(Scene({{1, 0, 1, 2, 3, 1}, {2, 4, 5, 6, 7, 1}})),
                  ViolationKind::DuplicateZ));
  EXPECT_TRUE(has(validate(Scene({{1, 0, std::numeric_limits<double>::infinity(), 2, 3, 1}})),
                  ViolationKind::NonFinite));
}

TEST(Canonicalize, TiedYValuesGetConsecutiveRanksById) {
  const Scene s({{7, 0, 1, 5, 9, 1}, {3, 2, 3, 5, 8, 2}});
  const Scene c = canonicalize(s);
  // Rect id 3 comes first among the two y = 5 values.
  EXPECT_EQ(c.rect(1).y1, 0);
  EXPECT_EQ(c.rect(0).y1, 1);
  EXPECT_TRUE(is_canonical(c));
  EXPECT_TRUE(validate(c).ok());
}

TEST(Canonicalize, DistinctSceneIsOrderIsomorphic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Scene s = test::random_scene(1 + rng() % 10, rng);
    const Scene c = canonicalize(s);
    ASSERT_TRUE(is_canonical(c));
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(c.rect(i).id, s.rect(i).id);
      for (std::size_t j = 0; j < s.size(); ++j) {
        const Rect& a = s.rect(i);
        const Rect& b = s.rect(j);
        const Rect& ca = c.rect(i);
        const Rect& cb = c.rect(j);
        EXPECT_EQ(a.x1 < b.x2, ca.x1 < cb.x2);
        EXPECT_EQ(a.x1 < b.x1, ca.x1 < cb.x1);
        EXPECT_EQ(a.y2 < b.y1, ca.y2 < cb.y1);
        EXPECT_EQ(a.z < b.z, ca.z < cb.z);
      }
    }
  }
}

TEST(Canonicalize, RejectsDegenerateRectangles) {
  EXPECT_THROW(canonicalize(Scene({{1, 2, 2, 0, 1, 0}})), std::invalid_argument);
}

// Shifts tied values apart by tiny amounts in (id, low-before-high) order.
Scene perturb(const Scene& s) {
  struct Ref {
    double value;
    RectId id;
    bool high;
    double* target;
  };
  std::vector<Rect> rects = s.rects();
  auto spread = [](std::vector<Ref> refs) {
    std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) {
      return std::tie(a.value, a.id, a.high) < std::tie(b.value, b.id, b.high);
    });
    for (std::size_t i = 0; i < refs.size();) {
      std::size_t j = i;
      while (j < refs.size() && refs[j].value == refs[i].value) {
        *refs[j].target = refs[j].value + 1e-6 * static_cast<double>(j - i);
        ++j;
      }
      i = j;
    }
  };
  std::vector<Ref> xs, ys, zs;
  for (Rect& r : rects) {
    xs.push_back({r.x1, r.id, false, &r.x1});
    xs.push_back({r.x2, r.id, true, &r.x2});
    ys.push_back({r.y1, r.id, false, &r.y1});
    ys.push_back({r.y2, r.id, true, &r.y2});
    zs.push_back({r.z, r.id, false, &r.z});
  }
  spread(xs);
  spread(ys);
  spread(zs);
  return Scene(std::move(rects));
}

TEST(Canonicalize, CollisionsResolveLikeSymbolicPerturbation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Scene base = canonicalize(test::random_scene(8, rng));
    std::vector<Rect> rects = base.rects();
    // Three collisions across different rectangles: x, y and z.
    rects[1].x1 = rects[0].x2;
    if (rects[1].x1 >= rects[1].x2) rects[1].x1 = rects[0].x1;
    if (rects[1].x1 >= rects[1].x2) continue;
    rects[3].y2 = rects[2].y2;
    if (rects[3].y1 >= rects[3].y2) continue;
    rects[5].z = rects[4].z;
    const Scene collided(rects);
    ASSERT_FALSE(validate(collided).ok());
    const OwnerGrid a(canonicalize(collided));
    const OwnerGrid b(perturb(collided));
    ASSERT_EQ(a.columns(), b.columns());
    ASSERT_EQ(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.columns(); ++i) {
      for (std::size_t j = 0; j < a.rows(); ++j) ASSERT_EQ(a.owner(i, j), b.owner(i, j));
    }
  }
}

TEST(Scene, OrdersAndBoundingBox) {
  const Scene s({{1, 4, 6, 0, 1, 2}, {2, 1, 9, 3, 5, 0}});
  EXPECT_EQ(s.bbox().x1, 1);
  EXPECT_EQ(s.bbox().x2, 9);
  EXPECT_EQ(s.bbox().y2, 5);
  std::vector<double> xs;
  for (Endpoint e : s.x_order()) xs.push_back(s.x_of(e));
  EXPECT_EQ(xs, (std::vector<double>{1, 4, 6, 9}));
  EXPECT_EQ(s.z_order(), (std::vector<std::uint32_t>{1, 0}));
}

}  // namespace
}  // namespace hsr
