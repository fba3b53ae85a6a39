#include "hsr/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hsr {

namespace {

template <typename Value>
std::vector<Endpoint> sorted_endpoints(const std::vector<Rect>& rects, Value value) {
  std::vector<Endpoint> order;
  order.reserve(2 * rects.size());
  for (std::uint32_t i = 0; i < rects.size(); ++i) {
    order.push_back({i, false});
    order.push_back({i, true});
  }
  std::sort(order.begin(), order.end(), [&](Endpoint a, Endpoint b) {
    const double va = value(a);
    const double vb = value(b);
    if (va != vb) return va < vb;
    if (rects[a.rect].id != rects[b.rect].id) return rects[a.rect].id < rects[b.rect].id;
    if (a.high != b.high) return !a.high;
    return a.rect < b.rect;
  });
  return order;
}

}  // namespace

Rect background_rect() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Rect{kBackgroundId, -inf, inf, -inf, inf, -inf};
}

Scene::Scene(std::vector<Rect> rects) : rects_(std::move(rects)) {
  if (!rects_.empty()) {
    bbox_ = {rects_[0].x1, rects_[0].x2, rects_[0].y1, rects_[0].y2};
    for (const Rect& r : rects_) {
      bbox_.x1 = std::min({bbox_.x1, r.x1, r.x2});
      bbox_.x2 = std::max({bbox_.x2, r.x1, r.x2});
      bbox_.y1 = std::min({bbox_.y1, r.y1, r.y2});
      bbox_.y2 = std::max({bbox_.y2, r.y1, r.y2});
    }
  }
  x_order_ = sorted_endpoints(rects_, [this](Endpoint e) { return x_of(e); });
  y_order_ = sorted_endpoints(rects_, [this](Endpoint e) { return y_of(e); });
  z_order_.resize(rects_.size());
  for (std::uint32_t i = 0; i < rects_.size(); ++i) z_order_[i] = i;
  std::sort(z_order_.begin(), z_order_.end(), [this](std::uint32_t a, std::uint32_t b) {
    if (rects_[a].z != rects_[b].z) return rects_[a].z < rects_[b].z;
    if (rects_[a].id != rects_[b].id) return rects_[a].id < rects_[b].id;
    return a < b;
  });
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonFinite: return "non-finite coordinate";
    case ViolationKind::EmptyXExtent: return "empty x-extent";
    case ViolationKind::EmptyYExtent: return "empty y-extent";
    case ViolationKind::DuplicateX: return "duplicate x coordinate";
    case ViolationKind::DuplicateY: return "duplicate y coordinate";
    case ViolationKind::DuplicateZ: return "duplicate z coordinate";
    case ViolationKind::DuplicateId: return "duplicate id";
    case ViolationKind::ReservedId: return "reserved id";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind) << " (ids";
  for (RectId id : ids) out << ' ' << id;
  out << ')';
  return out.str();
}

std::string ValidationReport::summary() const {
  if (ok()) return "OK";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].describe();
  }
  return out.str();
}

InvalidScene::InvalidScene(const ValidationReport& report)
    : std::runtime_error("invalid scene: " + report.summary()) {}

namespace {

// Groups of equal values in a sorted sequence become one violation each.
template <typename Key>
void report_duplicates(std::vector<std::pair<Key, RectId>> values, ViolationKind kind,
                       std::vector<Violation>& out) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j].first == values[i].first) ++j;
    if (j - i > 1) {
      Violation v{kind, {}};
      for (std::size_t t = i; t < j; ++t) v.ids.push_back(values[t].second);
      out.push_back(std::move(v));
    }
    i = j;
  }
}

}  // namespace

ValidationReport validate(const Scene& scene) {
  ValidationReport report;
  auto& out = report.violations;
  std::vector<std::pair<double, RectId>> xs, ys, zs;
  std::vector<std::pair<RectId, RectId>> ids;
  for (const Rect& r : scene.rects()) {
    if (!std::isfinite(r.x1) || !std::isfinite(r.x2) || !std::isfinite(r.y1) ||
        !std::isfinite(r.y2) || !std::isfinite(r.z)) {
      out.push_back({ViolationKind::NonFinite, {r.id}});
      continue;
    }
    if (!(r.x1 < r.x2)) out.push_back({ViolationKind::EmptyXExtent, {r.id}});
    if (!(r.y1 < r.y2)) out.push_back({ViolationKind::EmptyYExtent, {r.id}});
    if (r.id == kBackgroundId) out.push_back({ViolationKind::ReservedId, {r.id}});
    // A rect's own x1 == x2 is an empty extent, not a duplicate.
    xs.emplace_back(r.x1, r.id);
    if (r.x2 != r.x1) xs.emplace_back(r.x2, r.id);
    ys.emplace_back(r.y1, r.id);
    if (r.y2 != r.y1) ys.emplace_back(r.y2, r.id);
    zs.emplace_back(r.z, r.id);
    ids.emplace_back(r.id, r.id);
  }
  report_duplicates(std::move(ids), ViolationKind::DuplicateId, out);
  report_duplicates(std::move(xs), ViolationKind::DuplicateX, out);
  report_duplicates(std::move(ys), ViolationKind::DuplicateY, out);
  report_duplicates(std::move(zs), ViolationKind::DuplicateZ, out);
  return report;
}

Scene canonicalize(const Scene& scene) {
  for (const Rect& r : scene.rects()) {
    if (!std::isfinite(r.x1) || !std::isfinite(r.x2) || !std::isfinite(r.y1) ||
        !std::isfinite(r.y2) || !std::isfinite(r.z)) {
      throw std::invalid_argument("canonicalize: non-finite coordinate in rect " +
                                  std::to_string(r.id));
    }
    if (!(r.x1 < r.x2) || !(r.y1 < r.y2)) {
      throw std::invalid_argument("canonicalize: rect " + std::to_string(r.id) +
                                  " has no positive area");
    }
  }
  std::vector<Rect> out = scene.rects();
  const auto& xo = scene.x_order();
  for (std::size_t rank = 0; rank < xo.size(); ++rank) {
    Rect& r = out[xo[rank].rect];
    (xo[rank].high ? r.x2 : r.x1) = static_cast<double>(rank);
  }
  const auto& yo = scene.y_order();
  for (std::size_t rank = 0; rank < yo.size(); ++rank) {
    Rect& r = out[yo[rank].rect];
    (yo[rank].high ? r.y2 : r.y1) = static_cast<double>(rank);
  }
  const auto& zo = scene.z_order();
  for (std::size_t rank = 0; rank < zo.size(); ++rank) out[zo[rank]].z = static_cast<double>(rank);
  return Scene(std::move(out));
}

bool is_canonical(const Scene& scene) {
  const std::size_t n = scene.size();
  std::vector<char> seen_x(2 * n, 0), seen_y(2 * n, 0), seen_z(n, 0);
  auto mark = [](std::vector<char>& seen, double v) {
    if (!(v >= 0.0) || v >= static_cast<double>(seen.size()) || v != std::floor(v)) return false;
    char& slot = seen[static_cast<std::size_t>(v)];
    if (slot) return false;
    slot = 1;
    return true;
  };
  for (const Rect& r : scene.rects()) {
    if (r.id == kBackgroundId || !(r.x1 < r.x2) || !(r.y1 < r.y2)) return false;
    if (!mark(seen_x, r.x1) || !mark(seen_x, r.x2) || !mark(seen_y, r.y1) ||
        !mark(seen_y, r.y2) || !mark(seen_z, r.z)) {
      return false;
    }
  }
  // Ids must be unique for the owner mapping to be unambiguous.
  return validate(scene).ok();
}

}  // namespace hsr
