#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsr/region_tree.hpp"
#include "hsr/segment_tree.hpp"

namespace hsr {

// A rectangle alive at the current station, in canonical y with its layer.
struct ActiveRect {
  std::int32_t y1 = 0;
  std::int32_t y2 = 0;
  Layer layer = kBackgroundLayer;
};

// Everything the sweep holds right after processing the event at x.
struct StationView {
  const SegmentTree& tree;
  std::span<const VerticalSegment> segments;
  std::span<const char> alive;  // per segment: inserted and not yet deleted
  std::span<const HorizontalSpan> spans;
  const RegionTree& regions;
  std::span<const ActiveRect> active;
  std::size_t scene_size = 0;
  std::int32_t x = 0;
};

class StationCheckFailure : public TreeInternalError {
 public:
  using TreeInternalError::TreeInternalError;
};

// Recomputes High, Low, Top_v and the spanning value of every node, and the
// visible owner of every region strip, straight from their definitions and
// compares them with the maintained state. Throws StationCheckFailure on the
// first mismatch. Quadratic or worse; meant for small scenes.
void check_station(const StationView& view);

}  // namespace hsr
