#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hsr/scene.hpp"

namespace hsr {

enum class EdgeKind : std::uint8_t { Left, Right };

// One sweep station: the vertical edge of `rect` (an index into the scene).
struct Event {
  double x = 0.0;
  EdgeKind kind = EdgeKind::Left;
  std::uint32_t rect = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

// Partition of the x-sorted event list into consecutive slabs. Slab j covers
// (boundaries[j], boundaries[j+1]) and owns events [slab_begin[j],
// slab_begin[j+1]). No event lies on a boundary.
struct SlabPlan {
  std::vector<double> boundaries;
  std::vector<Event> events;
  std::vector<std::size_t> slab_begin;

  std::size_t slab_count() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
  std::span<const Event> slab_events(std::size_t slab) const {
    return std::span<const Event>(events).subspan(slab_begin[slab],
                                                  slab_begin[slab + 1] - slab_begin[slab]);
  }
  double left(std::size_t slab) const { return boundaries[slab]; }
  double right(std::size_t slab) const { return boundaries[slab + 1]; }
};

// Events per slab for a scene of n rectangles: 2n for n < 4, otherwise
// ceil(2n / ceil(log2 n)).
std::size_t default_slab_size(std::size_t n);

// Cuts a validated scene into slabs of at most `slab_size` events (default
// above). An empty scene yields a plan with zero slabs.
SlabPlan plan_slabs(const Scene& scene, std::optional<std::size_t> slab_size = std::nullopt);

// Indices of the rectangles whose x-extent strictly contains slab `slab`.
// Throws std::out_of_range for a bad slab index.
std::vector<std::uint32_t> spanning_segments(const Scene& scene, const SlabPlan& plan,
                                             std::size_t slab);

}  // namespace hsr
