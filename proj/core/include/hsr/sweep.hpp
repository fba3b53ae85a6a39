#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hsr/region_tree.hpp"
#include "hsr/scene.hpp"

namespace hsr {

// One output record: `owner` is visible over [x_start, x_end] x [y_low, y_high].
struct VisibleRegion {
  RectId owner = kBackgroundId;
  std::int64_t x_start = 0;
  std::int64_t x_end = 0;
  std::int64_t y_low = 0;
  std::int64_t y_high = 0;

  friend bool operator==(const VisibleRegion&, const VisibleRegion&) = default;
};

using RegionSink = std::function<void(const VisibleRegion&)>;

// Single-guard mutations of the edge procedures. Used by the test suite to
// show that the oracle notices each of them.
enum class GuardFault {
  None,
  LeftKeepVisible,       // never clear `visible` when R is below the node's low owner
  LeftStrictCanonical,   // treat a node as canonical only if strictly inside R
  LeftRouteBoth,         // descend into both children regardless of ymid
  LeftReportNoLowPrune,  // do not stop where R is hidden
  LeftReportNoHighTest,  // claim the whole node even if something is above R
  RightKeepVisible,
  RightStrictCanonical,
  RightRouteBoth,
  RightPathNoTopV,          // ignore Top_v of routing nodes when tracking R'
  RightReportNoLowPrune,
  RightReportNoTopV,        // ignore Top_v below the canonical node
  RightReportNoSpanning,    // ignore H_h below the canonical node
  RightReportNoHighTest,    // hand the node to R' even if its subtree is higher
};

inline constexpr GuardFault kAllGuardFaults[] = {
    GuardFault::LeftKeepVisible,       GuardFault::LeftStrictCanonical,
    GuardFault::LeftRouteBoth,         GuardFault::LeftReportNoLowPrune,
    GuardFault::LeftReportNoHighTest,  GuardFault::RightKeepVisible,
    GuardFault::RightStrictCanonical,  GuardFault::RightRouteBoth,
    GuardFault::RightPathNoTopV,       GuardFault::RightReportNoLowPrune,
    GuardFault::RightReportNoTopV,     GuardFault::RightReportNoSpanning,
    GuardFault::RightReportNoHighTest,
};

const char* to_string(GuardFault fault);

struct SweepOptions {
  bool report_background = false;
  // Events per slab; default_slab_size(n) when unset.
  std::optional<std::size_t> slab_size;
  // Recompute every node and leaf from scratch at every station and compare
  // (scenes of at most kDebugCheckLimit rectangles only).
  bool debug_checks = false;
  GuardFault fault = GuardFault::None;
};

inline constexpr std::size_t kDebugCheckLimit = 64;

// True when HSR_DEBUG_CHECKS=1 is set in the environment.
bool debug_checks_from_env();

struct SweepCounters {
  std::uint64_t k = 0;                   // non-background regions emitted
  std::uint64_t background_regions = 0;  // only with report_background
  std::uint64_t stations = 0;
  std::uint64_t slabs = 0;
  std::uint64_t node_visits = 0;
  std::uint64_t cursor_advances = 0;
  std::uint64_t paints = 0;              // coalesced region-tree accesses
  std::uint64_t slab_setup_work = 0;     // per-slab scans building S_v, S_h, y universe
  std::uint64_t precompute_work = 0;     // segment-tree construction
  std::uint64_t sequence_entries = 0;    // total entries allocated over all slabs
  std::uint64_t peak_live_entries = 0;   // segment-tree arrays + slab lists + region leaves
  RegionTreeCounters region;

  std::uint64_t total_operations() const;
};

// Computes the visible regions of a canonical scene (see canonicalize()),
// streaming them to `sink` in nondecreasing x_end. Throws InvalidScene if
// the scene is not canonical.
SweepCounters sweep(const Scene& scene, const SweepOptions& options, const RegionSink& sink);

struct SweepResult {
  std::vector<VisibleRegion> regions;
  SweepCounters counters;
};

SweepResult run(const Scene& scene, const SweepOptions& options = {});

// Merges regions of the same owner and y-strip that abut in x.
std::vector<VisibleRegion> coalesce(std::vector<VisibleRegion> regions);

}  // namespace hsr
