#include "hsr/scene_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hsr {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename T>
bool parse_number(const std::string& token, T& value) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

Scene parse_scene(std::istream& in, const std::string& source) {
  static const char* const kFields[] = {"id", "x1", "x2", "y1", "y2", "z"};
  std::vector<Rect> rects;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.size() != 6) {
      throw ParseError(source, number,
                       "expected 6 fields `id x1 x2 y1 y2 z`, got " + std::to_string(tokens.size()));
    }
    Rect r;
    if (!parse_number(tokens[0], r.id)) {
      throw ParseError(source, number, "id is not an integer: '" + tokens[0] + "'");
    }
    double* coords[] = {&r.x1, &r.x2, &r.y1, &r.y2, &r.z};
    for (int i = 0; i < 5; ++i) {
      if (!parse_number(tokens[i + 1], *coords[i]) || !std::isfinite(*coords[i])) {
        throw ParseError(source, number,
                         std::string(kFields[i + 1]) + " is not a finite number: '" +
                             tokens[i + 1] + "'");
      }
    }
    rects.push_back(r);
  }
  if (in.bad()) throw ParseError(source, number, "read error");
  return Scene(std::move(rects));
}

Scene read_scene_file(const std::string& path) {
  std::ifstream in = open_in(path);
  return parse_scene(in, path);
}

void write_scene(std::ostream& out, const Scene& scene) {
  out << "# id x1 x2 y1 y2 z\n";
  for (const Rect& r : scene.rects()) {
    out << r.id << ' ' << format_double(r.x1) << ' ' << format_double(r.x2) << ' '
        << format_double(r.y1) << ' ' << format_double(r.y2) << ' ' << format_double(r.z)
        << '\n';
  }
}

void write_scene_file(const std::string& path, const Scene& scene) {
  std::ofstream out = open_out(path);
  write_scene(out, scene);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

void write_regions(std::ostream& out, std::span<const VisibleRegion> regions) {
  out << kRegionsHeader << '\n';
  for (const VisibleRegion& r : regions) {
    out << r.owner << ',' << r.x_start << ',' << r.x_end << ',' << r.y_low << ',' << r.y_high
        << '\n';
  }
}

std::vector<VisibleRegion> parse_regions(std::istream& in, const std::string& source) {
  std::vector<VisibleRegion> regions;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    if (!header) {
      if (line != kRegionsHeader) {
        throw ParseError(source, number, std::string("expected header '") + kRegionsHeader + "'");
      }
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string c; std::getline(row, c, ',');) cells.push_back(c);
    if (cells.size() != 5) {
      throw ParseError(source, number, "expected 5 columns, got " + std::to_string(cells.size()));
    }
    VisibleRegion r;
    std::int64_t* fields[] = {&r.owner, &r.x_start, &r.x_end, &r.y_low, &r.y_high};
    for (int i = 0; i < 5; ++i) {
      if (!parse_number(cells[i], *fields[i])) {
        throw ParseError(source, number, "column " + std::to_string(i + 1) +
                                             " is not an integer: '" + cells[i] + "'");
      }
    }
    regions.push_back(r);
  }
  if (!header) throw ParseError(source, number, "missing header row");
  return regions;
}

std::vector<VisibleRegion> read_regions_file(const std::string& path) {
  std::ifstream in = open_in(path);
  return parse_regions(in, path);
}

}  // namespace hsr
