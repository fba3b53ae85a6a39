#include "hsr/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace hsr {
namespace {

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> shuffled_heights(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> z(n);
  std::iota(z.begin(), z.end(), 0.0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(z[i - 1], z[static_cast<std::size_t>(rng() % i)]);
  }
  return z;
}

Scene uniform(std::size_t n, std::mt19937_64& rng) {
  constexpr double kWidth = 1.0e6;
  const double side = 2.0 * kWidth / std::sqrt(static_cast<double>(n));
  while (true) {
    std::vector<double> z = shuffled_heights(n, rng);
    std::vector<Rect> rects;
    rects.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = side * (0.5 + unit(rng));
      const double h = side * (0.5 + unit(rng));
      const double x = unit(rng) * kWidth;
      const double y = unit(rng) * kWidth;
      rects.push_back({static_cast<RectId>(i), x, x + w, y, y + h, z[i]});
    }
    Scene scene(std::move(rects));
    // Coordinate collisions are vanishingly rare; draw again if one happens.
    if (validate(scene).ok()) return scene;
  }
}

Scene nested(std::size_t n, std::mt19937_64& rng) {
  const std::vector<double> z = shuffled_heights(n, rng);
  std::vector<Rect> rects;
  rects.reserve(n);
  const double far = 4.0 * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Offsets in (i, i+1) keep every coordinate distinct and the nesting strict.
    const double d = static_cast<double>(i);
    rects.push_back({static_cast<RectId>(i), d + 0.1 + 0.8 * unit(rng), far - d - 0.1 - 0.8 * unit(rng),
                     d + 0.1 + 0.8 * unit(rng), far - d - 0.1 - 0.8 * unit(rng), z[i]});
  }
  return Scene(std::move(rects));
}

Scene grid_stress(std::size_t n, std::mt19937_64& rng) {
  const std::size_t m = n / 2;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  std::vector<Rect> rects;
  rects.reserve(n);
  const double reach = 4.0 * static_cast<double>(m) + 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double d = static_cast<double>(i);
    const double span = reach + d;
    // Vertical bar i and horizontal bar order[i] alternate in height, so each
    // bar is cut by roughly half of the bars crossing it.
    rects.push_back({static_cast<RectId>(2 * i), 4 * d + 1, 4 * d + 2, -1 - d, span,
                     static_cast<double>(2 * i)});
    const double e = static_cast<double>(order[i]);
    rects.push_back({static_cast<RectId>(2 * i + 1), -1 - d, span, 4 * e + 1, 4 * e + 2,
                     static_cast<double>(2 * i + 1)});
  }
  return Scene(std::move(rects));
}

}  // namespace

const char* to_string(SceneKind kind) {
  switch (kind) {
    case SceneKind::Uniform: return "uniform";
    case SceneKind::Nested: return "nested";
    case SceneKind::GridStress: return "grid-stress";
  }
  return "unknown";
}

std::optional<SceneKind> parse_scene_kind(const std::string& name) {
  for (SceneKind k : {SceneKind::Uniform, SceneKind::Nested, SceneKind::GridStress}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

Scene generate(SceneKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("scene size must be at least 1");
  if (kind == SceneKind::GridStress && n % 2 != 0) {
    throw std::invalid_argument("grid-stress needs an even number of rectangles");
  }
  std::mt19937_64 rng(seed);
  switch (kind) {
    case SceneKind::Uniform: return uniform(n, rng);
    case SceneKind::Nested: return nested(n, rng);
    case SceneKind::GridStress: return grid_stress(n, rng);
  }
  throw std::invalid_argument("unknown scene kind");
}

}  // namespace hsr
