#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hsr/oracle.hpp"
#include "hsr/scene.hpp"
#include "hsr/sweep.hpp"

namespace hsr::test {

// n rectangles in general position with irregular (non-rank) coordinates.
inline Scene random_scene(std::size_t n, std::mt19937_64& rng) {
  auto axis = [&](std::size_t count) {
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> value(count);
    double at = static_cast<double>(rng() % 7);
    for (double& v : value) {
      at += 1.0 + static_cast<double>(rng() % 5) * 0.25;
      v = at;
    }
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = value[perm[i]];
    return out;
  };
  const std::vector<double> xs = axis(2 * n);
  const std::vector<double> ys = axis(2 * n);
  const std::vector<double> zs = axis(n);
  std::vector<Rect> rects;
  for (std::size_t i = 0; i < n; ++i) {
    rects.push_back({static_cast<RectId>(10 + 3 * i), std::min(xs[2 * i], xs[2 * i + 1]),
                     std::max(xs[2 * i], xs[2 * i + 1]), std::min(ys[2 * i], ys[2 * i + 1]),
                     std::max(ys[2 * i], ys[2 * i + 1]), zs[i]});
  }
  return Scene(std::move(rects));
}

// Runs the sweep on the canonical form and checks it with the oracle.
inline Verdict sweep_and_verify(const Scene& scene, const SweepOptions& options = {}) {
  const Scene canonical = canonicalize(scene);
  const SweepResult result = run(canonical, options);
  return verify(canonical, result.regions);
}

}  // namespace hsr::test
