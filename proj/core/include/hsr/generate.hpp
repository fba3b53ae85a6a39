#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hsr/scene.hpp"

namespace hsr {

enum class SceneKind {
  Uniform,     // random rectangles over a square, about four deep on average
  Nested,      // concentric rectangles with shuffled heights
  GridStress,  // n/2 horizontal and n/2 vertical bars crossing each other
};

const char* to_string(SceneKind kind);
std::optional<SceneKind> parse_scene_kind(const std::string& name);

// Deterministic in (kind, n, seed); the result always passes validate().
// Throws std::invalid_argument for n < 1, and for odd n with GridStress.
Scene generate(SceneKind kind, std::size_t n, std::uint64_t seed);

}  // namespace hsr
