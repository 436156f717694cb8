#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

enum class RenderFormat { kAscii, kSvg };

struct RenderSpec {
  BinaryWord word;
  bool show_bar = false;      // lower and upper Christoffel boundaries
  bool show_segment = false;  // Euclidean segment from (0,0) to (a,b)
  RenderFormat format = RenderFormat::kAscii;
  std::int64_t cell_size = 20;  // SVG pixels per lattice unit
};

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// 0 is a unit step right, 1 a unit step up. Returns |w| + 1 points starting
// at the origin.
std::vector<LatticePoint> lattice_path(const BinaryWord& w);

// ASCII: lattice points '.', path vertices 'o' joined by '-' and '|', bar
// boundaries '+' joined by '=' and ':', and with show_segment a '/' in every
// unit cell whose interior the segment crosses.
//
// SVG: standalone document, y axis pointing up. The path is the polyline
// with class "path"; boundaries have classes "lower" and "upper", the segment
// is the line with class "segment".
//
// Throws PreconditionError for an empty word, cell_size < 1, or show_bar when
// one of the letters does not occur.
std::string render(const RenderSpec& spec);

}  // namespace christoffel
