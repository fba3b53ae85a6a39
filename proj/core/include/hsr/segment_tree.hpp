#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hsr {

// Depth rank of an owner. Rectangles of a canonical scene use their z rank
// 0..n-1; the background is below all of them.
using Layer = std::int32_t;
inline constexpr Layer kBackgroundLayer = -1;

// A vertical edge of the current slab, clipped to it: associated with its
// canonical nodes from its insertion until its deletion.
struct VerticalSegment {
  std::int32_t y1 = 0;
  std::int32_t y2 = 0;
  Layer layer = kBackgroundLayer;
  // Inserted before the slab began (its left edge lies in an earlier slab).
  bool present_at_start = false;
};

// A rectangle whose x-extent spans the whole slab.
struct HorizontalSpan {
  std::int32_t y1 = 0;
  std::int32_t y2 = 0;
  Layer layer = kBackgroundLayer;
};

// Insertion or deletion of `segment` at station x. Updates are given in
// strictly increasing x.
struct TreeUpdate {
  std::int32_t x = 0;
  std::uint32_t segment = 0;
  bool insert = true;
};

struct NodeState {
  Layer high = kBackgroundLayer;   // highest owner in the subtree scene
  Layer low = kBackgroundLayer;    // lowest owner visible within the node's range
  Layer top_v = kBackgroundLayer;  // highest vertical segment associated here
};

class TreeInternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Static segment tree over the elementary y-intervals of one slab. Every
// insertion and deletion of the slab is replayed once during precompute();
// afterwards the sweep simulates each update by bumping the cursor of every
// node on its search path.
//
// Nodes are stored in preorder: lson(u) = u + 1 and rson(u) = u + 2 * (number
// of leaves under lson(u)).
class SegmentTree {
 public:
  using NodeId = std::uint32_t;

  // Builds the skeleton over the sorted distinct y values of the slab. Fewer
  // than two values give a single degenerate leaf.
  explicit SegmentTree(std::vector<std::int32_t> y_universe);

  std::size_t node_count() const { return lo_.size(); }
  std::size_t leaf_count() const { return leaves_; }
  NodeId root() const { return 0; }
  bool is_leaf(NodeId u) const { return hi_[u] - lo_[u] == 1; }
  NodeId lson(NodeId u) const { return u + 1; }
  NodeId rson(NodeId u) const { return u + 2 * ((hi_[u] - lo_[u]) / 2); }
  std::int32_t y1(NodeId u) const { return ys_[lo_[u]]; }
  std::int32_t y2(NodeId u) const { return ys_[hi_[u]]; }
  std::int32_t ymid(NodeId u) const { return ys_[lo_[u] + (hi_[u] - lo_[u]) / 2]; }
  // Elementary intervals [leaf_begin, leaf_end) under u.
  std::uint32_t leaf_begin(NodeId u) const { return lo_[u]; }
  std::uint32_t leaf_end(NodeId u) const { return hi_[u]; }
  std::span<const std::int32_t> y_universe() const { return ys_; }

  // The maximal nodes whose y-range lies inside [y1, y2], in y order.
  std::vector<NodeId> canonical_nodes(std::int32_t y1, std::int32_t y2) const;

  // Stores, for each leaf, the highest span covering it and, for each inner
  // node, the lowest of its children's values. The inner value is therefore
  // a span covering the whole node range whenever the node range has a
  // single topmost span.
  void fill_spanning(std::span<const HorizontalSpan> spans);
  Layer spanning_top(NodeId u) const { return hh_[u]; }

  // Replays all updates of the slab and records, for every node, the Top_v
  // sequence (one entry per update at the node) and the High/Low sequences
  // (one entry per update anywhere in its subtree). Resets all cursors.
  // With `cross_check`, Top_v is recomputed with per-node heaps and compared.
  void precompute(std::span<const VerticalSegment> segments,
                  std::span<const TreeUpdate> updates, bool cross_check = false);

  // Moves u's cursor past the update at station x. Throws TreeInternalError
  // if u has no pending update at x.
  void advance(NodeId u, std::int32_t x);
  NodeState current(NodeId u) const;

  std::uint32_t cursor(NodeId u) const { return p_[u]; }
  std::size_t update_count(NodeId u) const { return hl_off_[u + 1] - hl_off_[u]; }
  std::span<const Layer> high_sequence(NodeId u) const { return seq(high_, u); }
  std::span<const Layer> low_sequence(NodeId u) const { return seq(low_, u); }
  std::span<const std::int32_t> update_xs(NodeId u) const {
    return std::span<const std::int32_t>(hl_x_).subspan(hl_off_[u], update_count(u));
  }
  std::span<const Layer> top_sequence(NodeId u) const {
    return std::span<const Layer>(top_).subspan(tv_off_[u] + u, tv_off_[u + 1] - tv_off_[u] + 1);
  }
  std::span<const std::int32_t> top_xs(NodeId u) const {
    return std::span<const std::int32_t>(tv_x_).subspan(tv_off_[u], tv_off_[u + 1] - tv_off_[u]);
  }

  // Entries held by the skeleton, the precomputed sequences and the
  // temporary association lists of the last precompute().
  std::uint64_t live_entries() const;
  // Pointer hops, writes and merge steps spent in fill_spanning/precompute.
  std::uint64_t build_work() const { return build_work_; }

 private:
  std::span<const Layer> seq(const std::vector<Layer>& pool, NodeId u) const {
    return std::span<const Layer>(pool).subspan(hl_off_[u] + u, update_count(u) + 1);
  }
  void build(NodeId u, std::uint32_t lo, std::uint32_t hi);
  bool contains(NodeId u, std::int32_t a, std::int32_t b) const {
    return a <= y1(u) && y2(u) <= b;
  }

  std::vector<std::int32_t> ys_;
  std::size_t leaves_ = 0;
  std::vector<std::uint32_t> lo_;
  std::vector<std::uint32_t> hi_;
  std::vector<Layer> hh_;

  // Per node u: xHL entries [hl_off_[u], hl_off_[u+1]); High/Low entries start
  // at hl_off_[u] + u (one extra per node). Same scheme for xTop_v / Top_v.
  std::vector<std::uint32_t> hl_off_;
  std::vector<std::int32_t> hl_x_;
  std::vector<Layer> high_;
  std::vector<Layer> low_;
  std::vector<std::uint32_t> tv_off_;
  std::vector<std::int32_t> tv_x_;
  std::vector<Layer> top_;
  std::vector<std::uint32_t> p_;
  std::vector<std::uint32_t> tp_;

  std::uint64_t association_entries_ = 0;
  std::uint64_t build_work_ = 0;
};

}  // namespace hsr
