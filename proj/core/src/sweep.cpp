#include "hsr/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "hsr/segment_tree.hpp"
#include "hsr/slab_planner.hpp"
#include "hsr/station_checks.hpp"

namespace hsr {

const char* to_string(GuardFault fault) {
  switch (fault) {
    case GuardFault::None: return "none";
    case GuardFault::LeftKeepVisible: return "left-keep-visible";
    case GuardFault::LeftStrictCanonical: return "left-strict-canonical";
    case GuardFault::LeftRouteBoth: return "left-route-both";
    case GuardFault::LeftReportNoLowPrune: return "left-report-no-low-prune";
    case GuardFault::LeftReportNoHighTest: return "left-report-no-high-test";
    case GuardFault::RightKeepVisible: return "right-keep-visible";
    case GuardFault::RightStrictCanonical: return "right-strict-canonical";
    case GuardFault::RightRouteBoth: return "right-route-both";
    case GuardFault::RightPathNoTopV: return "right-path-no-top-v";
    case GuardFault::RightReportNoLowPrune: return "right-report-no-low-prune";
    case GuardFault::RightReportNoTopV: return "right-report-no-top-v";
    case GuardFault::RightReportNoSpanning: return "right-report-no-spanning";
    case GuardFault::RightReportNoHighTest: return "right-report-no-high-test";
  }
  return "unknown";
}

bool debug_checks_from_env() {
  const char* value = std::getenv("HSR_DEBUG_CHECKS");
  return value != nullptr && std::strcmp(value, "1") == 0;
}

std::uint64_t SweepCounters::total_operations() const {
  return node_visits + cursor_advances + paints + slab_setup_work + precompute_work +
         region.comparisons + region.inserts + region.erases + region.leaves_scanned +
         region.emitted;
}

namespace {

struct EdgeRect {
  std::int32_t x1 = 0;
  std::int32_t x2 = 0;
  std::int32_t y1 = 0;
  std::int32_t y2 = 0;
  Layer layer = kBackgroundLayer;
};

using NodeId = SegmentTree::NodeId;

class Sweeper {
 public:
  Sweeper(const Scene& scene, const SweepOptions& options, const RegionSink& sink)
      : scene_(scene),
        options_(options),
        sink_(sink),
        regions_(options.report_background, 0),
        debug_(options.debug_checks && scene.size() <= kDebugCheckLimit) {
    const std::size_t n = scene.size();
    rects_.reserve(n);
    by_layer_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Rect& r = scene.rect(i);
      rects_.push_back({static_cast<std::int32_t>(r.x1), static_cast<std::int32_t>(r.x2),
                        static_cast<std::int32_t>(r.y1), static_cast<std::int32_t>(r.y2),
                        static_cast<Layer>(r.z)});
      by_layer_[static_cast<std::size_t>(r.z)] = i;
    }
    segment_of_.assign(n, 0);
    active_pos_.assign(n, -1);
    y_mark_.assign(2 * n, 0);
    strip_sink_ = [this](const Strip& s) { on_strip(s); };
  }

  SweepCounters run() {
    const SlabPlan plan = plan_slabs(scene_, options_.slab_size);
    counters_.slabs = plan.slab_count();
    for (std::size_t j = 0; j < plan.slab_count(); ++j) {
      begin_slab(plan, j);
      for (const Event& e : plan.slab_events(j)) station(e);
      end_slab();
    }
    if (!plan.events.empty()) {
      regions_.flush(static_cast<std::int64_t>(plan.events.back().x), strip_sink_);
    }
    counters_.region = regions_.counters();
    return counters_;
  }

 private:
  void begin_slab(const SlabPlan& plan, std::size_t slab) {
    const auto events = plan.slab_events(slab);
    const double right = plan.right(slab);
    segments_.clear();
    spans_.clear();
    updates_.clear();
    // Rectangles alive at the slab's left plane either end inside the slab
    // (vertical segment present from the start) or span it.
    for (std::uint32_t r : active_) {
      const EdgeRect& e = rects_[r];
      if (e.x2 > right) {
        spans_.push_back({e.y1, e.y2, e.layer});
      } else {
        segment_of_[r] = static_cast<std::uint32_t>(segments_.size());
        segments_.push_back({e.y1, e.y2, e.layer, true});
      }
    }
    for (const Event& ev : events) {
      if (ev.kind != EdgeKind::Left) continue;
      const EdgeRect& e = rects_[ev.rect];
      segment_of_[ev.rect] = static_cast<std::uint32_t>(segments_.size());
      segments_.push_back({e.y1, e.y2, e.layer, false});
    }
    for (const Event& ev : events) {
      updates_.push_back({static_cast<std::int32_t>(ev.x), segment_of_[ev.rect],
                          ev.kind == EdgeKind::Left});
    }

    // y values of every rectangle alive somewhere in the slab, in rank order.
    auto mark = [this](std::int32_t y1, std::int32_t y2) {
      y_mark_[static_cast<std::size_t>(y1)] = 1;
      y_mark_[static_cast<std::size_t>(y2)] = 1;
    };
    for (const VerticalSegment& s : segments_) mark(s.y1, s.y2);
    for (const HorizontalSpan& s : spans_) mark(s.y1, s.y2);
    std::vector<std::int32_t> ys;
    ys.reserve(2 * (segments_.size() + spans_.size()));
    for (std::size_t y = 0; y < y_mark_.size(); ++y) {
      if (y_mark_[y]) {
        ys.push_back(static_cast<std::int32_t>(y));
        y_mark_[y] = 0;
      }
    }
    counters_.slab_setup_work +=
        active_.size() + 2 * events.size() + segments_.size() + spans_.size() + y_mark_.size();

    tree_.emplace(std::move(ys));
    tree_->fill_spanning(spans_);
    tree_->precompute(segments_, updates_, debug_);
    counters_.precompute_work += tree_->build_work();
    slab_entries_ = tree_->live_entries() + 4 * segments_.size() + 3 * spans_.size() +
                    3 * updates_.size();
    counters_.sequence_entries += tree_->live_entries();
    note_live();

    if (debug_) {
      segment_alive_.assign(segments_.size(), 0);
      for (std::size_t s = 0; s < segments_.size(); ++s) {
        segment_alive_[s] = segments_[s].present_at_start ? 1 : 0;
      }
    }
  }

  void end_slab() {
    const SegmentTree& tree = *tree_;
    for (NodeId u = 0; u < tree.node_count(); ++u) {
      if (tree.cursor(u) != tree.update_count(u)) {
        throw TreeInternalError("cursor of node " + std::to_string(u) +
                                " did not reach the end of its updates");
      }
    }
  }

  void station(const Event& ev) {
    x_ = static_cast<std::int32_t>(ev.x);
    const EdgeRect& r = rects_[ev.rect];
    if (ev.kind == EdgeKind::Left) {
      left_edge(r, true, tree_->root());
      flush_paint();
      active_pos_[ev.rect] = static_cast<std::int64_t>(active_.size());
      active_.push_back(ev.rect);
    } else {
      right_edge(r, true, kBackgroundLayer, tree_->root());
      flush_paint();
      const auto pos = static_cast<std::size_t>(active_pos_[ev.rect]);
      active_pos_[active_.back()] = static_cast<std::int64_t>(pos);
      active_[pos] = active_.back();
      active_.pop_back();
      active_pos_[ev.rect] = -1;
    }
    ++counters_.stations;
    note_live();
    if (debug_) {
      segment_alive_[segment_of_[ev.rect]] = ev.kind == EdgeKind::Left ? 1 : 0;
      check();
    }
  }

  bool canonical(const EdgeRect& r, NodeId u, bool strict) const {
    const SegmentTree& t = *tree_;
    return strict ? (r.y1 < t.y1(u) && t.y2(u) < r.y2) : (r.y1 <= t.y1(u) && t.y2(u) <= r.y2);
  }

  bool faulty(GuardFault f) const { return options_.fault == f; }

  // The scene without R: cursors still point before R's insertion.
  void left_edge(const EdgeRect& r, bool visible, NodeId u) {
    SegmentTree& t = *tree_;
    ++counters_.node_visits;
    const NodeState s = t.current(u);
    if (r.layer < s.low && !faulty(GuardFault::LeftKeepVisible)) visible = false;
    if (canonical(r, u, faulty(GuardFault::LeftStrictCanonical))) {
      if (visible) left_report(r, u);
    } else if (!t.is_leaf(u)) {
      const bool both = faulty(GuardFault::LeftRouteBoth);
      if (both || r.y1 < t.ymid(u)) left_edge(r, visible, t.lson(u));
      if (both || r.y2 > t.ymid(u)) left_edge(r, visible, t.rson(u));
    }
    t.advance(u, x_);
    ++counters_.cursor_advances;
  }

  void left_report(const EdgeRect& r, NodeId u) {
    const SegmentTree& t = *tree_;
    ++counters_.node_visits;
    const NodeState s = t.current(u);
    if (r.layer < s.low && !faulty(GuardFault::LeftReportNoLowPrune)) return;
    // At a leaf low == high, so surviving the prune means R is on top.
    if (t.is_leaf(u) || s.high < r.layer || faulty(GuardFault::LeftReportNoHighTest)) {
      queue_paint(t.y1(u), t.y2(u), r.layer);
      return;
    }
    left_report(r, t.lson(u));
    left_report(r, t.rson(u));
  }

  // The scene without R as well: each node on the path is advanced past R's
  // deletion before it is examined.
  void right_edge(const EdgeRect& r, bool visible, Layer revealed, NodeId u) {
    SegmentTree& t = *tree_;
    ++counters_.node_visits;
    t.advance(u, x_);
    ++counters_.cursor_advances;
    const NodeState s = t.current(u);
    if (r.layer < s.low && !faulty(GuardFault::RightKeepVisible)) visible = false;
    if (canonical(r, u, faulty(GuardFault::RightStrictCanonical))) {
      if (visible) right_report(r, revealed, u);
    } else if (!t.is_leaf(u)) {
      if (!faulty(GuardFault::RightPathNoTopV)) revealed = std::max(revealed, s.top_v);
      const bool both = faulty(GuardFault::RightRouteBoth);
      if (both || r.y1 < t.ymid(u)) right_edge(r, visible, revealed, t.lson(u));
      if (both || r.y2 > t.ymid(u)) right_edge(r, visible, revealed, t.rson(u));
    }
  }

  // `revealed` is the highest rectangle covering all of u among those listed
  // on the path from the root; it replaces R wherever nothing in u's subtree
  // is higher.
  void right_report(const EdgeRect& r, Layer revealed, NodeId u) {
    const SegmentTree& t = *tree_;
    ++counters_.node_visits;
    const NodeState s = t.current(u);
    if (r.layer < s.low && !faulty(GuardFault::RightReportNoLowPrune)) return;
    if (!faulty(GuardFault::RightReportNoTopV)) revealed = std::max(revealed, s.top_v);
    if (!faulty(GuardFault::RightReportNoSpanning)) {
      revealed = std::max(revealed, t.spanning_top(u));
    }
    if (t.is_leaf(u) || s.high <= revealed || faulty(GuardFault::RightReportNoHighTest)) {
      queue_paint(t.y1(u), t.y2(u), revealed);
      return;
    }
    right_report(r, revealed, t.lson(u));
    right_report(r, revealed, t.rson(u));
  }

  // Pieces arrive in increasing y. Abutting pieces form one run and one
  // region-tree access; a run ends at the first gap.
  void queue_paint(std::int64_t lo, std::int64_t hi, Layer owner) {
    if (!run_.empty() && run_.back().y_hi == lo) {
      if (run_.back().owner == owner) {
        run_.back().y_hi = hi;
      } else {
        run_.push_back({lo, hi, owner});
      }
      return;
    }
    flush_paint();
    run_.push_back({lo, hi, owner});
  }

  void flush_paint() {
    if (run_.empty()) return;
    regions_.paint_run(run_, x_, strip_sink_);
    ++counters_.paints;
    run_.clear();
  }

  void on_strip(const Strip& s) {
    VisibleRegion out{kBackgroundId, s.x_start, s.x_end, s.y_low, s.y_high};
    if (s.owner == kBackgroundLayer) {
      ++counters_.background_regions;
    } else {
      out.owner = scene_.rect(by_layer_[static_cast<std::size_t>(s.owner)]).id;
      ++counters_.k;
    }
    if (sink_) sink_(out);
  }

  void note_live() {
    counters_.peak_live_entries =
        std::max<std::uint64_t>(counters_.peak_live_entries, slab_entries_ + regions_.size());
  }

  void check() {
    std::vector<ActiveRect> active;
    active.reserve(active_.size());
    for (std::uint32_t r : active_) active.push_back({rects_[r].y1, rects_[r].y2, rects_[r].layer});
    check_station(StationView{*tree_, segments_, segment_alive_, spans_, regions_, active,
                              scene_.size(), x_});
  }

  const Scene& scene_;
  const SweepOptions& options_;
  const RegionSink& sink_;
  std::vector<EdgeRect> rects_;
  std::vector<std::uint32_t> by_layer_;
  RegionTree regions_;
  StripSink strip_sink_;
  bool debug_;
  std::optional<SegmentTree> tree_;
  std::int32_t x_ = 0;

  std::vector<VerticalSegment> segments_;
  std::vector<HorizontalSpan> spans_;
  std::vector<TreeUpdate> updates_;
  std::vector<std::uint32_t> segment_of_;
  std::vector<char> segment_alive_;
  std::vector<std::uint32_t> active_;
  std::vector<std::int64_t> active_pos_;
  std::vector<char> y_mark_;
  std::vector<RegionTree::Piece> run_;
  std::uint64_t slab_entries_ = 0;
  SweepCounters counters_;
};

}  // namespace

SweepCounters sweep(const Scene& scene, const SweepOptions& options, const RegionSink& sink) {
  if (!is_canonical(scene)) {
    const ValidationReport report = validate(scene);
    if (!report.ok()) throw InvalidScene(report);
    throw std::invalid_argument("sweep requires a canonical scene; canonicalize() it first");
  }
  return Sweeper(scene, options, sink).run();
}

SweepResult run(const Scene& scene, const SweepOptions& options) {
  SweepResult result;
  result.counters = sweep(scene, options, [&](const VisibleRegion& r) {
    result.regions.push_back(r);
  });
  return result;
}

std::vector<VisibleRegion> coalesce(std::vector<VisibleRegion> regions) {
  std::sort(regions.begin(), regions.end(), [](const VisibleRegion& a, const VisibleRegion& b) {
    return std::tie(a.owner, a.y_low, a.y_high, a.x_start) <
           std::tie(b.owner, b.y_low, b.y_high, b.x_start);
  });
  std::vector<VisibleRegion> out;
  for (const VisibleRegion& r : regions) {
    if (!out.empty()) {
      VisibleRegion& last = out.back();
      if (last.owner == r.owner && last.y_low == r.y_low && last.y_high == r.y_high &&
          last.x_end == r.x_start) {
        last.x_end = r.x_end;
        continue;
      }
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const VisibleRegion& a, const VisibleRegion& b) {
    return std::tie(a.x_end, a.y_low, a.x_start) < std::tie(b.x_end, b.y_low, b.x_start);
  });
  return out;
}

}  // namespace hsr
