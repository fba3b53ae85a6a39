#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "hsr/sweep.hpp"

namespace hsr {

// Fill colour of an owner as "#rrggbb"; a fixed grey for the background.
std::string owner_color(RectId owner);

// Draws every region as a filled rectangle, y pointing up, scaled to fit a
// `size` pixel square. Depends on nothing but the regions and their order.
void write_svg(std::ostream& out, std::span<const VisibleRegion> regions, int size = 800);

}  // namespace hsr
