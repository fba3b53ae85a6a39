#include "hsr/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace hsr {
namespace {

std::vector<double> distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Index of `value` in the sorted grid lines, or -1 when it is not a line.
std::ptrdiff_t line_index(const std::vector<double>& lines, double value) {
  const auto it = std::lower_bound(lines.begin(), lines.end(), value);
  if (it == lines.end() || *it != value) return -1;
  return it - lines.begin();
}

std::string describe(const VisibleRegion& r) {
  std::ostringstream out;
  out << "region owner=" << r.owner << " x=[" << r.x_start << "," << r.x_end << "] y=["
      << r.y_low << "," << r.y_high << "]";
  return out.str();
}

Verdict failure(std::string message, std::optional<std::pair<std::size_t, std::size_t>> cell) {
  return Verdict{false, std::move(message), cell};
}

}  // namespace

OwnerGrid::OwnerGrid(const Scene& scene) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const Rect& r : scene.rects()) {
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y1);
    ys.push_back(r.y2);
  }
  xs_ = distinct(std::move(xs));
  ys_ = distinct(std::move(ys));
  owner_.assign(columns() * rows(), kBackgroundId);
  for (std::size_t i = 0; i < columns(); ++i) {
    const double cx = (xs_[i] + xs_[i + 1]) / 2;
    for (std::size_t j = 0; j < rows(); ++j) {
      const double cy = (ys_[j] + ys_[j + 1]) / 2;
      const Rect* best = nullptr;
      for (const Rect& r : scene.rects()) {
        if (r.x1 < cx && cx < r.x2 && r.y1 < cy && cy < r.y2 && (!best || r.z > best->z)) {
          best = &r;
        }
      }
      if (best) owner_[i * rows() + j] = best->id;
    }
  }
}

Verdict verify(const OwnerGrid& grid, std::span<const VisibleRegion> regions) {
  const std::size_t cols = grid.columns();
  const std::size_t rows = grid.rows();
  std::vector<char> covered(cols * rows, 0);
  for (const VisibleRegion& r : regions) {
    if (r.x_start >= r.x_end || r.y_low >= r.y_high) {
      return failure(describe(r) + " has no area", std::nullopt);
    }
    const auto i0 = line_index(grid.xs(), static_cast<double>(r.x_start));
    const auto i1 = line_index(grid.xs(), static_cast<double>(r.x_end));
    const auto j0 = line_index(grid.ys(), static_cast<double>(r.y_low));
    const auto j1 = line_index(grid.ys(), static_cast<double>(r.y_high));
    if (i0 < 0 || i1 < 0 || j0 < 0 || j1 < 0) {
      return failure(describe(r) + " is not aligned to the scene's coordinates", std::nullopt);
    }
    for (auto i = static_cast<std::size_t>(i0); i < static_cast<std::size_t>(i1); ++i) {
      for (auto j = static_cast<std::size_t>(j0); j < static_cast<std::size_t>(j1); ++j) {
        const RectId want = grid.owner(i, j);
        if (want != r.owner) {
          std::ostringstream out;
          out << describe(r) << " covers a cell where " << want << " is visible";
          return failure(out.str(), std::pair{i, j});
        }
        char& c = covered[i * rows + j];
        if (c) return failure(describe(r) + " overlaps another region", std::pair{i, j});
        c = 1;
      }
    }
  }
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      if (grid.owner(i, j) != kBackgroundId && !covered[i * rows + j]) {
        std::ostringstream out;
        out << "cell visible as " << grid.owner(i, j) << " is not reported";
        return failure(out.str(), std::pair{i, j});
      }
    }
  }
  return {};
}

Verdict verify(const Scene& scene, std::span<const VisibleRegion> regions) {
  return verify(OwnerGrid(scene), regions);
}

std::size_t count_faces(const OwnerGrid& grid) {
  const std::size_t cols = grid.columns();
  const std::size_t rows = grid.rows();
  std::vector<char> seen(cols * rows, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::size_t faces = 0;
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      const RectId owner = grid.owner(i, j);
      if (owner == kBackgroundId || seen[i * rows + j]) continue;
      ++faces;
      seen[i * rows + j] = 1;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t p, std::size_t q) {
          if (grid.owner(p, q) != owner || seen[p * rows + q]) return;
          seen[p * rows + q] = 1;
          stack.push_back({p, q});
        };
        if (a > 0) visit(a - 1, b);
        if (a + 1 < cols) visit(a + 1, b);
        if (b > 0) visit(a, b - 1);
        if (b + 1 < rows) visit(a, b + 1);
      }
    }
  }
  return faces;
}

}  // namespace hsr
