#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsr/scene.hpp"
#include "hsr/sweep.hpp"

namespace hsr {

// Malformed input; what() starts with "<source>:<line>: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One rectangle per line, `id x1 x2 y1 y2 z`, whitespace separated. Blank
// lines and everything after `#` are ignored. The scene is not validated.
Scene parse_scene(std::istream& in, const std::string& source = "<scene>");
Scene read_scene_file(const std::string& path);
void write_scene(std::ostream& out, const Scene& scene);
void write_scene_file(const std::string& path, const Scene& scene);

inline constexpr const char* kRegionsHeader = "owner_id,x_start,x_end,y_low,y_high";

void write_regions(std::ostream& out, std::span<const VisibleRegion> regions);
// Expects the header row first.
std::vector<VisibleRegion> parse_regions(std::istream& in, const std::string& source = "<regions>");
std::vector<VisibleRegion> read_regions_file(const std::string& path);

}  // namespace hsr
