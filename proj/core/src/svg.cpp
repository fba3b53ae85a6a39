#include "hsr/svg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>

namespace hsr {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string owner_color(RectId owner) {
  if (owner == kBackgroundId) return "#d0d0d0";
  const std::uint64_t h = mix(static_cast<std::uint64_t>(owner));
  // Keep channels away from black and white so edges stay readable.
  const unsigned r = 48 + static_cast<unsigned>(h & 0xff) % 176;
  const unsigned g = 48 + static_cast<unsigned>((h >> 8) & 0xff) % 176;
  const unsigned b = 48 + static_cast<unsigned>((h >> 16) & 0xff) % 176;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

void write_svg(std::ostream& out, std::span<const VisibleRegion> regions, int size) {
  std::int64_t x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!regions.empty()) {
    x0 = y0 = std::numeric_limits<std::int64_t>::max();
    x1 = y1 = std::numeric_limits<std::int64_t>::min();
    for (const VisibleRegion& r : regions) {
      x0 = std::min(x0, r.x_start);
      x1 = std::max(x1, r.x_end);
      y0 = std::min(y0, r.y_low);
      y1 = std::max(y1, r.y_high);
    }
  }
  const double scale =
      static_cast<double>(size) / static_cast<double>(std::max<std::int64_t>({x1 - x0, y1 - y0, 1}));
  const double width = static_cast<double>(x1 - x0) * scale;
  const double height = static_cast<double>(y1 - y0) * scale;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.3f %.3f\">\n",
                width, height, width, height);
  out << buf;
  for (const VisibleRegion& r : regions) {
    const double x = static_cast<double>(r.x_start - x0) * scale;
    const double y = static_cast<double>(y1 - r.y_high) * scale;
    const double w = static_cast<double>(r.x_end - r.x_start) * scale;
    const double h = static_cast<double>(r.y_high - r.y_low) * scale;
    std::snprintf(buf, sizeof buf,
                  "  <rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" fill=\"%s\" "
                  "stroke=\"#000\" stroke-width=\"0.5\"><title>%lld</title></rect>\n",
                  x, y, w, h, owner_color(r.owner).c_str(), static_cast<long long>(r.owner));
    out << buf;
  }
  out << "</svg>\n";
}

}  // namespace hsr
