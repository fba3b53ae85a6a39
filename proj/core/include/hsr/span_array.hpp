#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hsr {

inline constexpr std::int64_t kNoSpan = -1;

// A horizontal segment [t1, t2] in the t-z plane covering the unit
// intervals [i, i+1] for t1 <= i < t2.
struct SpanSegment {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  double z = 0.0;
  std::int64_t id = 0;
};

// For every unit interval [i, i+1], 0 <= i < length, the id of the highest
// segment covering it, or kNoSpan. `segments` must be in strictly decreasing
// z order (std::invalid_argument otherwise) and lie within [0, length].
//
// Each interval is written once; a skip-pointer forest with path halving
// jumps over intervals already claimed by a higher segment, so the work is
// O((q + length) * alpha). `work`, when given, is incremented by the number
// of pointer hops and writes performed.
std::vector<std::int64_t> topmost_spans(std::span<const SpanSegment> segments,
                                        std::size_t length, std::uint64_t* work = nullptr);

// The classic statement: q segments with t-coordinates in [0, 2q-1] and an
// answer array of 2q entries.
std::vector<std::int64_t> topmost_span_array(std::span<const SpanSegment> segments,
                                             std::size_t q, std::uint64_t* work = nullptr);

}  // namespace hsr
