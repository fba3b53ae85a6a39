#include "hsr/region_tree.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace hsr {

RegionTree::RegionTree(bool report_background, std::int64_t sentinel_x_start)
    : report_background_(report_background), leaves_(CountingLess{&counters_.comparisons}) {
  leaves_.emplace(kSentinelY, LeafData{kBackgroundLayer, sentinel_x_start});
  note_size();
}

std::int64_t RegionTree::upper_y(ConstLeaf f) const {
  const auto next = std::next(f);
  return next == leaves_.end() ? kTopY : next->first;
}

std::pair<RegionTree::Leaf, RegionTree::Leaf> RegionTree::locate_range(std::int64_t y_lo,
                                                                       std::int64_t y_hi) {
  // The sentinel compares below every real key, so both predecessors exist.
  Leaf p = std::prev(leaves_.lower_bound(y_lo));
  Leaf q = p;
  // Short ranges usually end within a few leaves of p; walk before searching.
  for (int step = 0; step < 4; ++step) {
    const Leaf next = std::next(q);
    ++counters_.leaves_scanned;
    if (next == leaves_.end() || next->first >= y_hi) return {p, q};
    q = next;
  }
  q = std::prev(leaves_.lower_bound(y_hi));
  return {p, q};
}

void RegionTree::emit(Layer owner, std::int64_t x_start, std::int64_t x_end, std::int64_t y_low,
                      std::int64_t y_high, const StripSink& sink) {
  if (x_start >= x_end || y_low >= y_high) return;
  if (owner == kBackgroundLayer &&
      (!report_background_ || y_low == kSentinelY || y_high == kTopY)) {
    return;
  }
  ++counters_.emitted;
  if (sink) sink(Strip{owner, x_start, x_end, y_low, y_high});
}

std::size_t RegionTree::report_between(Leaf p, Leaf q, std::int64_t sweep_x,
                                       std::int64_t clip_lo, std::int64_t clip_hi,
                                       const StripSink& sink) {
  const std::uint64_t before = counters_.emitted;
  for (Leaf f = p;; ++f) {
    ++counters_.leaves_scanned;
    const std::int64_t lo = std::max(f->first, clip_lo);
    const std::int64_t hi = std::min(upper_y(f), clip_hi);
    emit(f->second.region, f->second.x_start, sweep_x, lo, hi, sink);
    if (f == q) break;
  }
  return static_cast<std::size_t>(counters_.emitted - before);
}

void RegionTree::remove_range(Leaf p, Leaf q) {
  if (p == q) return;
  for (Leaf f = std::next(p); f != q;) {
    f = leaves_.erase(f);
    ++counters_.erases;
  }
}

RegionTree::Leaf RegionTree::insert_edge(std::int64_t y, Layer region, std::int64_t x_start,
                                         Leaf hint) {
  const std::size_t before = leaves_.size();
  Leaf f = leaves_.emplace_hint(hint, y, LeafData{region, x_start});
  if (leaves_.size() == before) {
    throw TreeInternalError("region tree already has a leaf at y=" + std::to_string(y));
  }
  ++counters_.inserts;
  note_size();
  return f;
}

RegionTree::Leaf RegionTree::insert_edge(std::int64_t y, Layer region, std::int64_t x_start) {
  return insert_edge(y, region, x_start, leaves_.lower_bound(y));
}

void RegionTree::erase(Leaf f) {
  leaves_.erase(f);
  ++counters_.erases;
}

void RegionTree::set_region(Leaf f, Layer owner, std::int64_t x_now, const StripSink& sink) {
  if (f->second.region == owner) return;
  emit(f->second.region, f->second.x_start, x_now, f->first, upper_y(f), sink);
  f->second = {owner, x_now};
}

void RegionTree::paint(std::int64_t y_lo, std::int64_t y_hi, Layer owner, std::int64_t x,
                       const StripSink& sink) {
  const Piece piece{y_lo, y_hi, owner};
  paint_run(std::span<const Piece>(&piece, 1), x, sink);
}

void RegionTree::paint_run(std::span<const Piece> run, std::int64_t x, const StripSink& sink) {
  if (run.empty()) return;
  const std::int64_t y_lo = run.front().y_lo;
  const std::int64_t y_hi = run.back().y_hi;
  auto [p, q] = locate_range(y_lo, y_hi);
  // A repaint with the current owner would end its strip for nothing; the
  // sweep never asks for one.
  std::size_t i = 0;
  for (Leaf f = p;; ++f) {
    const std::int64_t top = upper_y(f);
    while (i < run.size() && run[i].y_hi <= f->first) ++i;
    for (std::size_t j = i; j < run.size() && run[j].y_lo < top; ++j) {
      if (run[j].owner == f->second.region && run[j].y_hi > f->first && top > run[j].y_lo) {
        throw TreeInternalError("repaint of strip at y=" + std::to_string(f->first) +
                                " with its current owner");
      }
    }
    if (f == q) break;
  }
  const LeafData above = q->second;  // the strip that continues past y_hi
  Leaf after = std::next(q);
  const bool edge_at_hi = after != leaves_.end() && after->first == y_hi;

  report_between(p, q, x, y_lo, y_hi, sink);

  Leaf low = std::next(p);
  if (low != leaves_.end() && low->first == y_lo) {
    remove_range(low, after);
    low->second = {run.front().owner, x};
  } else {
    remove_range(p, after);
    low = insert_edge(y_lo, run.front().owner, x, after);
  }
  for (std::size_t k = 1; k < run.size(); ++k) {
    if (run[k].y_lo != run[k - 1].y_hi || run[k].owner == run[k - 1].owner) {
      throw TreeInternalError("paint run pieces must abut and alternate owners");
    }
    insert_edge(run[k].y_lo, run[k].owner, x, after);
  }
  Leaf high = edge_at_hi ? after : insert_edge(y_hi, above.region, above.x_start, after);

  const Layer top_owner = run.back().owner;
  if (high->second.region == top_owner) {
    if (high->second.x_start != x) {
      emit(top_owner, high->second.x_start, x, high->first, upper_y(high), sink);
    }
    erase(high);
  }
  Leaf below = std::prev(low);
  if (below->second.region == run.front().owner) {
    if (below->second.x_start != x) {
      emit(below->second.region, below->second.x_start, x, below->first, low->first, sink);
      below->second.x_start = x;
    }
    erase(low);
  }
}

void RegionTree::flush(std::int64_t x, const StripSink& sink) {
  for (Leaf f = leaves_.begin(); f != leaves_.end(); ++f) {
    ++counters_.leaves_scanned;
    emit(f->second.region, f->second.x_start, x, f->first, upper_y(f), sink);
    f->second.x_start = x;
  }
}

}  // namespace hsr
