#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsr/scene.hpp"
#include "hsr/sweep.hpp"

namespace hsr {

// Visible owner of every cell of the grid spanned by the scene's distinct x
// and y coordinates, found by testing each cell centre against every
// rectangle. O(n^3); independent of the sweep.
class OwnerGrid {
 public:
  explicit OwnerGrid(const Scene& scene);

  std::size_t columns() const { return xs_.size() < 2 ? 0 : xs_.size() - 1; }
  std::size_t rows() const { return ys_.size() < 2 ? 0 : ys_.size() - 1; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  // Owner id of cell (i, j) = [xs[i], xs[i+1]] x [ys[j], ys[j+1]].
  RectId owner(std::size_t i, std::size_t j) const { return owner_[i * rows() + j]; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<RectId> owner_;
};

struct Verdict {
  bool ok = true;
  std::string message;
  // First offending cell (column, row), when the failure is tied to one.
  std::optional<std::pair<std::size_t, std::size_t>> cell;
};

// Checks that `regions` (in the scene's coordinates) have positive area and
// grid-aligned corners, name real owners, do not overlap, and cover every
// non-background cell with its visible owner. Background regions, if any,
// may only lie over background cells.
Verdict verify(const OwnerGrid& grid, std::span<const VisibleRegion> regions);
Verdict verify(const Scene& scene, std::span<const VisibleRegion> regions);

// Number of 4-connected components of equal non-background owner.
std::size_t count_faces(const OwnerGrid& grid);

}  // namespace hsr
