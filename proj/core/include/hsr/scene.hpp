#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsr {

using RectId = std::int64_t;

// Reserved id of the fictitious rectangle lying behind the whole scene.
inline constexpr RectId kBackgroundId = -1;

// An iso-oriented rectangle [x1,x2] x [y1,y2] at height z. Larger z is closer
// to the viewer at z = +inf.
struct Rect {
  RectId id = 0;
  double x1 = 0.0;
  double x2 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double z = 0.0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// The background sentinel: covers the plane, loses every depth comparison.
Rect background_rect();

// Reference to one coordinate of one rectangle. `high` selects x2/y2 over
// x1/y1; it is unused for z.
struct Endpoint {
  std::uint32_t rect = 0;
  bool high = false;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Immutable collection of rectangles with precomputed coordinate orders.
// Ties in a coordinate are ordered by (value, rect id, low-before-high).
class Scene {
 public:
  struct Box {
    double x1 = 0.0;
    double x2 = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
  };

  Scene() = default;
  explicit Scene(std::vector<Rect> rects);

  const std::vector<Rect>& rects() const { return rects_; }
  const Rect& rect(std::size_t index) const { return rects_[index]; }
  std::size_t size() const { return rects_.size(); }
  bool empty() const { return rects_.empty(); }

  // Bounding box of all rectangles; all zeros for an empty scene.
  Box bbox() const { return bbox_; }

  // 2n endpoints sorted by x (resp. y); n rect indices sorted by z.
  const std::vector<Endpoint>& x_order() const { return x_order_; }
  const std::vector<Endpoint>& y_order() const { return y_order_; }
  const std::vector<std::uint32_t>& z_order() const { return z_order_; }

  double x_of(Endpoint e) const { return e.high ? rects_[e.rect].x2 : rects_[e.rect].x1; }
  double y_of(Endpoint e) const { return e.high ? rects_[e.rect].y2 : rects_[e.rect].y1; }

  friend bool operator==(const Scene& a, const Scene& b) { return a.rects_ == b.rects_; }

 private:
  std::vector<Rect> rects_;
  Box bbox_;
  std::vector<Endpoint> x_order_;
  std::vector<Endpoint> y_order_;
  std::vector<std::uint32_t> z_order_;
};

enum class ViolationKind {
  NonFinite,
  EmptyXExtent,
  EmptyYExtent,
  DuplicateX,
  DuplicateY,
  DuplicateZ,
  DuplicateId,
  ReservedId,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<RectId> ids;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks positive extents, finiteness, id uniqueness and pairwise
// distinctness of all x, y and z coordinates.
ValidationReport validate(const Scene& scene);

// Replaces every coordinate by its rank in the scene's coordinate order:
// x and y become 0..2n-1, z becomes 0..n-1. Throws std::invalid_argument for
// rectangles without positive area or with non-finite coordinates.
Scene canonicalize(const Scene& scene);

// True when the coordinates already are the ranks canonicalize() produces.
bool is_canonical(const Scene& scene);

class InvalidScene : public std::runtime_error {
 public:
  explicit InvalidScene(const ValidationReport& report);
};

}  // namespace hsr
