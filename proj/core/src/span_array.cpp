#include "hsr/span_array.hpp"

#include <stdexcept>
#include <string>

namespace hsr {

std::vector<std::int64_t> topmost_spans(std::span<const SpanSegment> segments,
                                        std::size_t length, std::uint64_t* work) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const SpanSegment& s = segments[i];
    if (s.t1 < 0 || s.t2 < s.t1 || static_cast<std::size_t>(s.t2) > length) {
      throw std::invalid_argument("span segment " + std::to_string(s.id) + " out of range");
    }
    if (i > 0 && !(segments[i - 1].z > s.z)) {
      throw std::invalid_argument("span segments are not in decreasing z order");
    }
  }

  std::vector<std::int64_t> answer(length, kNoSpan);
  // next[i] leads to the first unclaimed interval >= i; next[length] is the end.
  std::vector<std::size_t> next(length + 1);
  for (std::size_t i = 0; i <= length; ++i) next[i] = i;
  std::uint64_t steps = 0;
  auto find = [&](std::size_t i) {
    while (next[i] != i) {
      next[i] = next[next[i]];
      i = next[i];
      ++steps;
    }
    return i;
  };

  for (const SpanSegment& s : segments) {
    const auto end = static_cast<std::size_t>(s.t2);
    for (std::size_t i = find(static_cast<std::size_t>(s.t1)); i < end;
         i = find(i + 1)) {
      answer[i] = s.id;
      next[i] = i + 1;
      ++steps;
    }
    ++steps;
  }
  if (work) *work += steps + length;
  return answer;
}

std::vector<std::int64_t> topmost_span_array(std::span<const SpanSegment> segments,
                                             std::size_t q, std::uint64_t* work) {
  for (const SpanSegment& s : segments) {
    if (s.t1 < 0 || static_cast<std::size_t>(s.t2) + 1 > 2 * q) {
      throw std::invalid_argument("t-coordinates must lie in [0, 2q-1]");
    }
  }
  return topmost_spans(segments, 2 * q, work);
}

}  // namespace hsr
