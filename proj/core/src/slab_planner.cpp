#include "hsr/slab_planner.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hsr {

std::size_t default_slab_size(std::size_t n) {
  if (n < 4) return std::max<std::size_t>(2 * n, 1);
  const std::size_t log_n = static_cast<std::size_t>(std::bit_width(n - 1));  // ceil(log2 n)
  return (2 * n + log_n - 1) / log_n;
}

SlabPlan plan_slabs(const Scene& scene, std::optional<std::size_t> slab_size) {
  SlabPlan plan;
  if (scene.empty()) return plan;
  if (slab_size && *slab_size == 0) throw std::invalid_argument("slab size must be positive");
  const std::size_t per_slab = slab_size.value_or(default_slab_size(scene.size()));

  plan.events.reserve(2 * scene.size());
  for (Endpoint e : scene.x_order()) {
    plan.events.push_back({scene.x_of(e), e.high ? EdgeKind::Right : EdgeKind::Left, e.rect});
  }
  const std::size_t total = plan.events.size();
  for (std::size_t begin = 0; begin < total; begin += per_slab) plan.slab_begin.push_back(begin);
  plan.slab_begin.push_back(total);

  // Boundaries sit halfway between the last event of one slab and the first
  // of the next; the outer ones half a unit beyond the extreme events.
  plan.boundaries.push_back(plan.events.front().x - 0.5);
  for (std::size_t s = 1; s + 1 < plan.slab_begin.size(); ++s) {
    const std::size_t b = plan.slab_begin[s];
    plan.boundaries.push_back(0.5 * (plan.events[b - 1].x + plan.events[b].x));
  }
  plan.boundaries.push_back(plan.events.back().x + 0.5);
  return plan;
}

std::vector<std::uint32_t> spanning_segments(const Scene& scene, const SlabPlan& plan,
                                             std::size_t slab) {
  if (slab >= plan.slab_count()) throw std::out_of_range("slab index out of range");
  std::vector<std::uint32_t> out;
  const double lo = plan.left(slab);
  const double hi = plan.right(slab);
  for (std::uint32_t i = 0; i < scene.size(); ++i) {
    const Rect& r = scene.rect(i);
    if (r.x1 < lo && r.x2 > hi) out.push_back(i);
  }
  return out;
}

}  // namespace hsr
