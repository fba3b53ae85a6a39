#include "hsr/segment_tree.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

#include "hsr/span_array.hpp"

namespace hsr {

SegmentTree::SegmentTree(std::vector<std::int32_t> y_universe) : ys_(std::move(y_universe)) {
  if (ys_.size() < 2) {
    const std::int32_t y = ys_.empty() ? 0 : ys_.front();
    ys_.assign(2, y);
  }
  leaves_ = ys_.size() - 1;
  const std::size_t nodes = 2 * leaves_ - 1;
  lo_.resize(nodes);
  hi_.resize(nodes);
  hh_.assign(nodes, kBackgroundLayer);
  build(0, 0, static_cast<std::uint32_t>(leaves_));
  // An unprecomputed tree behaves like one with no updates.
  hl_off_.assign(nodes + 1, 0);
  tv_off_.assign(nodes + 1, 0);
  high_.assign(nodes, kBackgroundLayer);
  low_.assign(nodes, kBackgroundLayer);
  top_.assign(nodes, kBackgroundLayer);
  p_.assign(nodes, 0);
  tp_.assign(nodes, 0);
}

void SegmentTree::build(NodeId u, std::uint32_t lo, std::uint32_t hi) {
  lo_[u] = lo;
  hi_[u] = hi;
  if (hi - lo == 1) return;
  const std::uint32_t mid = lo + (hi - lo) / 2;
  build(lson(u), lo, mid);
  build(rson(u), mid, hi);
}

std::vector<SegmentTree::NodeId> SegmentTree::canonical_nodes(std::int32_t a,
                                                              std::int32_t b) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (contains(u, a, b)) {
      out.push_back(u);
    } else if (!is_leaf(u)) {
      // Right child first so that the stack yields nodes in y order.
      if (b > ymid(u)) stack.push_back(rson(u));
      if (a < ymid(u)) stack.push_back(lson(u));
    }
  }
  return out;
}

void SegmentTree::fill_spanning(std::span<const HorizontalSpan> spans) {
  std::vector<HorizontalSpan> sorted(spans.begin(), spans.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const HorizontalSpan& a, const HorizontalSpan& b) { return a.layer > b.layer; });
  std::vector<SpanSegment> segs;
  segs.reserve(sorted.size());
  for (const HorizontalSpan& s : sorted) {
    const auto t1 = std::lower_bound(ys_.begin(), ys_.end(), s.y1) - ys_.begin();
    const auto t2 = std::lower_bound(ys_.begin(), ys_.end(), s.y2) - ys_.begin();
    segs.push_back({t1, std::min<std::int64_t>(t2, static_cast<std::int64_t>(leaves_)),
                    static_cast<double>(s.layer), s.layer});
  }
  const std::vector<std::int64_t> per_leaf = topmost_spans(segs, leaves_, &build_work_);
  for (NodeId u = static_cast<NodeId>(node_count()); u-- > 0;) {
    if (is_leaf(u)) {
      const std::int64_t top = per_leaf[lo_[u]];
      hh_[u] = top == kNoSpan ? kBackgroundLayer : static_cast<Layer>(top);
    } else {
      hh_[u] = std::min(hh_[lson(u)], hh_[rson(u)]);
    }
    ++build_work_;
  }
}

namespace {

struct Association {
  SegmentTree::NodeId node = 0;
  std::uint32_t first_window = 0;  // window index after the insertion
  std::uint32_t end_window = 0;    // window index after the deletion, 0 = never
};

// Stable bucket of (node, value) pairs into CSR form; `offsets` gets one
// entry per node plus a terminator.
template <typename Value>
void bucket_by_node(const std::vector<std::pair<std::uint32_t, Value>>& pairs,
                    std::size_t nodes, std::vector<std::uint32_t>& offsets,
                    std::vector<Value>& values) {
  offsets.assign(nodes + 1, 0);
  for (const auto& [node, value] : pairs) ++offsets[node + 1];
  for (std::size_t u = 0; u < nodes; ++u) offsets[u + 1] += offsets[u];
  values.resize(pairs.size());
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [node, value] : pairs) values[fill[node]++] = value;
}

}  // namespace

void SegmentTree::precompute(std::span<const VerticalSegment> segments,
                             std::span<const TreeUpdate> updates, bool cross_check) {
  const std::size_t nodes = node_count();

  // Canonical nodes of every segment, in the order the replay walk meets them.
  std::vector<std::uint32_t> assoc_begin(segments.size() + 1, 0);
  std::vector<Association> assoc;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    assoc_begin[s] = static_cast<std::uint32_t>(assoc.size());
    for (NodeId u : canonical_nodes(segments[s].y1, segments[s].y2)) {
      assoc.push_back({u, 0, 0});
      ++build_work_;
    }
  }
  assoc_begin[segments.size()] = static_cast<std::uint32_t>(assoc.size());
  association_entries_ = assoc.size() + assoc_begin.size();

  // Replay: every node on the search path of an update gets an xHL entry;
  // canonical nodes also get an xTop_v entry.
  std::vector<std::pair<std::uint32_t, std::int32_t>> hl_pairs;
  std::vector<std::pair<std::uint32_t, std::int32_t>> tv_pairs;
  std::vector<std::uint32_t> tv_seen(nodes, 0);
  std::vector<NodeId> stack;
  for (const TreeUpdate& up : updates) {
    const VerticalSegment& seg = segments[up.segment];
    std::uint32_t k = assoc_begin[up.segment];
    stack.assign(1, root());
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      hl_pairs.emplace_back(u, up.x);
      ++build_work_;
      if (contains(u, seg.y1, seg.y2)) {
        tv_pairs.emplace_back(u, up.x);
        const std::uint32_t window = ++tv_seen[u];
        Association& a = assoc[k++];
        if (a.node != u) throw TreeInternalError("association order mismatch");
        (up.insert ? a.first_window : a.end_window) = window;
      } else if (!is_leaf(u)) {
        if (seg.y2 > ymid(u)) stack.push_back(rson(u));
        if (seg.y1 < ymid(u)) stack.push_back(lson(u));
      }
    }
  }
  bucket_by_node(hl_pairs, nodes, hl_off_, hl_x_);
  bucket_by_node(tv_pairs, nodes, tv_off_, tv_x_);
  build_work_ += hl_pairs.size() + tv_pairs.size();

  // Top_v: per node, the associations as time spans over its windows,
  // processed from the highest segment down.
  std::vector<std::uint32_t> order(segments.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return segments[a].layer > segments[b].layer;
  });
  std::vector<std::pair<std::uint32_t, SpanSegment>> span_pairs;
  span_pairs.reserve(assoc.size());
  for (std::uint32_t s : order) {
    for (std::uint32_t k = assoc_begin[s]; k < assoc_begin[s + 1]; ++k) {
      const Association& a = assoc[k];
      const std::uint32_t windows = tv_off_[a.node + 1] - tv_off_[a.node] + 1;
      const std::uint32_t end = a.end_window == 0 ? windows : a.end_window;
      span_pairs.emplace_back(a.node, SpanSegment{a.first_window, end,
                                                  static_cast<double>(segments[s].layer),
                                                  segments[s].layer});
    }
  }
  std::vector<std::uint32_t> span_off;
  std::vector<SpanSegment> spans;
  bucket_by_node(span_pairs, nodes, span_off, spans);
  association_entries_ += spans.size() + span_off.size();

  top_.assign(tv_x_.size() + nodes, kBackgroundLayer);
  for (NodeId u = 0; u < nodes; ++u) {
    if (span_off[u] == span_off[u + 1]) continue;
    const std::size_t windows = tv_off_[u + 1] - tv_off_[u] + 1;
    const auto tops = topmost_spans(
        std::span<const SpanSegment>(spans).subspan(span_off[u], span_off[u + 1] - span_off[u]),
        windows, &build_work_);
    for (std::size_t i = 0; i < windows; ++i) {
      top_[tv_off_[u] + u + i] = tops[i] == kNoSpan ? kBackgroundLayer : static_cast<Layer>(tops[i]);
    }
  }

  if (cross_check) {
    // Independent replay with lazy-deletion max-heaps.
    std::vector<std::priority_queue<std::pair<Layer, std::uint32_t>>> heaps(nodes);
    std::vector<char> alive(segments.size(), 0);
    auto top_of = [&](NodeId u) {
      auto& h = heaps[u];
      while (!h.empty() && !alive[h.top().second]) h.pop();
      return h.empty() ? kBackgroundLayer : h.top().first;
    };
    auto check = [&](NodeId u, std::uint32_t window) {
      if (top_[tv_off_[u] + u + window] != top_of(u)) {
        throw TreeInternalError("Top_v mismatch at node " + std::to_string(u) + " window " +
                                std::to_string(window));
      }
    };
    for (std::uint32_t s = 0; s < segments.size(); ++s) {
      if (!segments[s].present_at_start) continue;
      alive[s] = 1;
      for (std::uint32_t k = assoc_begin[s]; k < assoc_begin[s + 1]; ++k) {
        heaps[assoc[k].node].emplace(segments[s].layer, s);
      }
    }
    for (NodeId u = 0; u < nodes; ++u) check(u, 0);
    std::vector<std::uint32_t> seen(nodes, 0);
    for (const TreeUpdate& up : updates) {
      alive[up.segment] = up.insert ? 1 : 0;
      for (std::uint32_t k = assoc_begin[up.segment]; k < assoc_begin[up.segment + 1]; ++k) {
        const NodeId u = assoc[k].node;
        if (up.insert) heaps[u].emplace(segments[up.segment].layer, up.segment);
        check(u, ++seen[u]);
      }
    }
  }

  // High/Low, children before parents.
  high_.assign(hl_x_.size() + nodes, kBackgroundLayer);
  low_.assign(hl_x_.size() + nodes, kBackgroundLayer);
  for (NodeId u = static_cast<NodeId>(nodes); u-- > 0;) {
    const std::uint32_t base = hl_off_[u] + u;
    const std::uint32_t tbase = tv_off_[u] + u;
    const std::span<const std::int32_t> xs = update_xs(u);
    if (is_leaf(u)) {
      for (std::size_t i = 0; i <= xs.size(); ++i) {
        high_[base + i] = low_[base + i] = std::max(hh_[u], top_[tbase + i]);
      }
      build_work_ += xs.size() + 1;
      continue;
    }
    const NodeId l = lson(u);
    const NodeId r = rson(u);
    const std::span<const std::int32_t> lx = update_xs(l);
    const std::span<const std::int32_t> rx = update_xs(r);
    const std::span<const std::int32_t> tx = top_xs(u);
    const std::uint32_t lbase = hl_off_[l] + l;
    const std::uint32_t rbase = hl_off_[r] + r;
    std::size_t cl = 0, cr = 0, ct = 0;
    for (std::size_t i = 0; i <= xs.size(); ++i) {
      if (i > 0) {
        const std::int32_t x = xs[i - 1];
        if (cl < lx.size() && lx[cl] == x) ++cl;
        if (cr < rx.size() && rx[cr] == x) ++cr;
        if (ct < tx.size() && tx[ct] == x) ++ct;
      }
      const Layer tv = top_[tbase + ct];
      high_[base + i] = std::max({high_[lbase + cl], high_[rbase + cr], tv});
      low_[base + i] = std::max(std::min(low_[lbase + cl], low_[rbase + cr]), tv);
    }
    if (cl != lx.size() || cr != rx.size() || ct != tx.size()) {
      throw TreeInternalError("update sequences of node " + std::to_string(u) +
                              " do not cover its children");
    }
    build_work_ += xs.size() + 1;
  }

  std::fill(p_.begin(), p_.end(), 0);
  std::fill(tp_.begin(), tp_.end(), 0);
}

void SegmentTree::advance(NodeId u, std::int32_t x) {
  const std::uint32_t p = p_[u];
  if (p >= update_count(u)) {
    throw TreeInternalError("cursor overrun at node " + std::to_string(u));
  }
  if (hl_x_[hl_off_[u] + p] != x) {
    throw TreeInternalError("cursor drift at node " + std::to_string(u) + ": expected x=" +
                            std::to_string(hl_x_[hl_off_[u] + p]) + ", got x=" +
                            std::to_string(x));
  }
  p_[u] = p + 1;
  const std::uint32_t tp = tp_[u];
  if (tv_off_[u] + tp < tv_off_[u + 1] && tv_x_[tv_off_[u] + tp] == x) tp_[u] = tp + 1;
}

NodeState SegmentTree::current(NodeId u) const {
  const std::uint32_t base = hl_off_[u] + u + p_[u];
  return {high_[base], low_[base], top_[tv_off_[u] + u + tp_[u]]};
}

std::uint64_t SegmentTree::live_entries() const {
  return lo_.size() + hh_.size() + hl_off_.size() + hl_x_.size() + high_.size() + low_.size() +
         tv_off_.size() + tv_x_.size() + top_.size() + p_.size() + tp_.size() + ys_.size() +
         association_entries_;
}

}  // namespace hsr
