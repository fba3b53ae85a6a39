#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <utility>

#include "hsr/segment_tree.hpp"

namespace hsr {

// A reported piece of visible surface in canonical coordinates.
struct Strip {
  Layer owner = kBackgroundLayer;
  std::int64_t x_start = 0;
  std::int64_t x_end = 0;
  std::int64_t y_low = 0;
  std::int64_t y_high = 0;

  friend bool operator==(const Strip&, const Strip&) = default;
};

using StripSink = std::function<void(const Strip&)>;

struct RegionTreeCounters {
  std::uint64_t comparisons = 0;   // key comparisons inside the search tree
  std::uint64_t inserts = 0;
  std::uint64_t erases = 0;
  std::uint64_t leaves_scanned = 0;
  std::uint64_t emitted = 0;       // strips handed to a sink
  std::size_t peak_leaves = 0;
};

// Search tree over the currently visible horizontal edges. Leaf f owns the
// strip between f.y and the next leaf's y: `region` is the rectangle visible
// there and `x_start` the station where that pairing began. A sentinel leaf
// at y = -inf with background region is always present.
//
// Backed by std::map (a red-black tree); the map's in-order iterators are the
// doubly linked leaf list.
class RegionTree {
 public:
  struct LeafData {
    Layer region = kBackgroundLayer;
    std::int64_t x_start = 0;
  };

 private:
  struct CountingLess {
    std::uint64_t* count;
    bool operator()(std::int64_t a, std::int64_t b) const {
      ++*count;
      return a < b;
    }
  };
  using Map = std::map<std::int64_t, LeafData, CountingLess>;

 public:
  using Leaf = Map::iterator;
  using ConstLeaf = Map::const_iterator;

  static constexpr std::int64_t kSentinelY = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kTopY = std::numeric_limits<std::int64_t>::max();

  // Background strips are only emitted when `report_background` is set, and
  // never when unbounded.
  explicit RegionTree(bool report_background = false, std::int64_t sentinel_x_start = 0);
  RegionTree(const RegionTree&) = delete;
  RegionTree& operator=(const RegionTree&) = delete;

  std::size_t size() const { return leaves_.size(); }
  Leaf sentinel() { return leaves_.begin(); }
  ConstLeaf begin() const { return leaves_.begin(); }
  ConstLeaf end() const { return leaves_.end(); }
  // y of the leaf after f, or kTopY for the last leaf.
  std::int64_t upper_y(ConstLeaf f) const;

  // p: last leaf with y < y_lo; q: last leaf with y < y_hi.
  std::pair<Leaf, Leaf> locate_range(std::int64_t y_lo, std::int64_t y_hi);

  // Emits the strips of leaves p..q (inclusive), clipped to [clip_lo,
  // clip_hi], as ending at sweep_x. Returns the number emitted.
  std::size_t report_between(Leaf p, Leaf q, std::int64_t sweep_x, std::int64_t clip_lo,
                             std::int64_t clip_hi, const StripSink& sink);

  // Deletes all leaves strictly between p and q.
  void remove_range(Leaf p, Leaf q);

  // New leaf at y; `hint` should be the leaf that will follow it. Throws
  // TreeInternalError if a leaf at y exists.
  Leaf insert_edge(std::int64_t y, Layer region, std::int64_t x_start, Leaf hint);
  Leaf insert_edge(std::int64_t y, Layer region, std::int64_t x_start);
  void erase(Leaf f);

  // Ends f's current strip at x_now (emitting it) and hands the strip to
  // `owner` from x_now on. No-op when owner already owns it.
  void set_region(Leaf f, Layer owner, std::int64_t x_now, const StripSink& sink);

  // Makes `owner` the visible rectangle over (y_lo, y_hi) from x on. Parts
  // of strips it covers are emitted; uncovered remainders keep their start.
  // A neighbouring strip of the same owner is merged, emitting it first if
  // it started earlier. Throws TreeInternalError if a strip in the range is
  // already owned by `owner`.
  void paint(std::int64_t y_lo, std::int64_t y_hi, Layer owner, std::int64_t x,
             const StripSink& sink);

  struct Piece {
    std::int64_t y_lo;
    std::int64_t y_hi;
    Layer owner;
  };
  // paint() for consecutive abutting pieces with alternating owners, done as
  // one access: each covered strip is reported once, not once per piece.
  void paint_run(std::span<const Piece> run, std::int64_t x, const StripSink& sink);

  // Emits every strip as ending at x.
  void flush(std::int64_t x, const StripSink& sink);

  const RegionTreeCounters& counters() const { return counters_; }

 private:
  void emit(Layer owner, std::int64_t x_start, std::int64_t x_end, std::int64_t y_low,
            std::int64_t y_high, const StripSink& sink);
  void note_size() { counters_.peak_leaves = std::max(counters_.peak_leaves, leaves_.size()); }

  RegionTreeCounters counters_;
  bool report_background_;
  Map leaves_;
};

}  // namespace hsr
