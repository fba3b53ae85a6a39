#include "hsr/station_checks.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace hsr {
namespace {

using NodeId = SegmentTree::NodeId;

struct Item {
  std::int32_t y1;
  std::int32_t y2;
  Layer layer;
};

[[noreturn]] void fail(std::int32_t x, const std::string& what) {
  std::ostringstream out;
  out << "station x=" << x << ": " << what;
  throw StationCheckFailure(out.str());
}

std::string node_name(const SegmentTree& t, NodeId u) {
  return "node " + std::to_string(u) + " [" + std::to_string(t.y1(u)) + "," +
         std::to_string(t.y2(u)) + "]";
}

void check_nodes(const StationView& v) {
  const SegmentTree& t = v.tree;
  std::vector<NodeId> parent(t.node_count(), 0);
  for (NodeId u = 0; u < t.node_count(); ++u) {
    if (t.is_leaf(u)) continue;
    parent[t.lson(u)] = u;
    parent[t.rson(u)] = u;
  }
  std::vector<Layer> spanning(t.node_count(), kBackgroundLayer);
  // Children follow their parent in preorder, so a reverse pass is bottom-up.
  for (NodeId u = static_cast<NodeId>(t.node_count()); u-- > 0;) {
    if (t.is_leaf(u)) {
      for (const HorizontalSpan& s : v.spans) {
        if (s.y1 <= t.y1(u) && t.y2(u) <= s.y2) spanning[u] = std::max(spanning[u], s.layer);
      }
    } else {
      spanning[u] = std::min(spanning[t.lson(u)], spanning[t.rson(u)]);
    }
  }

  std::vector<Item> relevant;
  for (NodeId u = 0; u < t.node_count(); ++u) {
    const bool root = u == t.root();
    const std::int32_t py1 = root ? 0 : t.y1(parent[u]);
    const std::int32_t py2 = root ? 0 : t.y2(parent[u]);
    Layer top_v = kBackgroundLayer;
    relevant.clear();
    for (std::size_t i = 0; i < v.segments.size(); ++i) {
      if (!v.alive[i]) continue;
      const VerticalSegment& s = v.segments[i];
      const bool meets = s.y1 < t.y2(u) && t.y1(u) < s.y2;
      const bool covers_parent = !root && s.y1 <= py1 && py2 <= s.y2;
      if (!meets || covers_parent) continue;
      relevant.push_back({s.y1, s.y2, s.layer});
      if (s.y1 <= t.y1(u) && t.y2(u) <= s.y2) top_v = std::max(top_v, s.layer);
    }
    for (const HorizontalSpan& s : v.spans) relevant.push_back({s.y1, s.y2, s.layer});

    Layer high = kBackgroundLayer;
    Layer low = kBackgroundLayer;
    bool first = true;
    const auto ys = t.y_universe();
    for (std::uint32_t leaf = t.leaf_begin(u); leaf < t.leaf_end(u); ++leaf) {
      Layer top = kBackgroundLayer;
      for (const Item& s : relevant) {
        if (s.y1 <= ys[leaf] && ys[leaf + 1] <= s.y2) top = std::max(top, s.layer);
      }
      high = std::max(high, top);
      low = first ? top : std::min(low, top);
      first = false;
    }

    const NodeState got = t.current(u);
    if (got.high != high || got.low != low || got.top_v != top_v) {
      std::ostringstream out;
      out << node_name(t, u) << " has (high,low,top_v)=(" << got.high << "," << got.low << ","
          << got.top_v << "), expected (" << high << "," << low << "," << top_v << ")";
      fail(v.x, out.str());
    }
    if (t.spanning_top(u) != spanning[u]) {
      fail(v.x, node_name(t, u) + " spanning value " + std::to_string(t.spanning_top(u)) +
                    ", expected " + std::to_string(spanning[u]));
    }
  }
}

void check_regions(const StationView& v) {
  const RegionTree& r = v.regions;
  if (r.size() > 2 * v.scene_size + 1) {
    fail(v.x, "region tree has " + std::to_string(r.size()) + " leaves");
  }
  std::vector<std::int64_t> cuts;
  for (const ActiveRect& a : v.active) {
    cuts.push_back(a.y1);
    cuts.push_back(a.y2);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto top_over = [&](std::int64_t lo, std::int64_t hi) {
    Layer top = kBackgroundLayer;
    for (const ActiveRect& a : v.active) {
      if (a.y1 <= lo && hi <= a.y2) top = std::max(top, a.layer);
    }
    return top;
  };

  const RegionTree::ConstLeaf begin = r.begin();
  if (begin->first != RegionTree::kSentinelY) fail(v.x, "region tree lost its sentinel");
  Layer previous = kBackgroundLayer;
  for (auto f = begin; f != r.end(); ++f) {
    const std::int64_t lo = f->first;
    const std::int64_t hi = r.upper_y(f);
    const Layer region = f->second.region;
    if (f != begin && region == previous) {
      fail(v.x, "adjacent strips at y=" + std::to_string(lo) + " share an owner");
    }
    if (f->second.x_start > v.x) {
      fail(v.x, "strip at y=" + std::to_string(lo) + " starts after the sweep line");
    }
    previous = region;
    // Every elementary piece inside the strip must show `region`.
    std::int64_t piece_lo = lo;
    auto it = std::upper_bound(cuts.begin(), cuts.end(), lo);
    while (true) {
      const std::int64_t piece_hi = (it == cuts.end() || *it >= hi) ? hi : *it;
      const bool unbounded =
          piece_lo == RegionTree::kSentinelY || piece_hi == RegionTree::kTopY;
      const Layer want = unbounded ? kBackgroundLayer : top_over(piece_lo, piece_hi);
      if (want != region) {
        std::ostringstream out;
        out << "strip (" << lo << "," << hi << ") owned by " << region << " but " << want
            << " is visible over (" << piece_lo << "," << piece_hi << ")";
        fail(v.x, out.str());
      }
      if (piece_hi == hi) break;
      piece_lo = piece_hi;
      ++it;
    }
  }
}

}  // namespace

void check_station(const StationView& view) {
  check_nodes(view);
  check_regions(view);
}

}  // namespace hsr
