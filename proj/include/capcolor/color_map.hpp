#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "capcolor/graph.hpp"

namespace capcolor {

using Color = std::uint32_t;
inline constexpr Color kNoColor = std::numeric_limits<Color>::max();

// Vertex -> color map indexed by host vertex id. Entries equal to
// kNoColor are unassigned; a coloring produced by this library is total
// on its host and uses every color in {0..palette_size-1}.
struct Coloring {
  std::vector<Color> color_of;
  std::size_t palette_size = 0;

  std::size_t size() const noexcept { return color_of.size(); }
  Color operator[](Vertex v) const { return color_of[v]; }

  bool total() const {
    return std::find(color_of.begin(), color_of.end(), kNoColor) == color_of.end();
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Renames colors to {0..k-1} in order of first appearance by value, so
// the relative order of the surviving colors is kept. Unassigned entries
// stay unassigned.
inline Coloring normalized(std::vector<Color> colors) {
  std::vector<Color> used;
  for (Color c : colors) {
    if (c != kNoColor) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (Color& c : colors) {
    if (c != kNoColor) {
      c = static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
    }
  }
  return {std::move(colors), used.size()};
}

}  // namespace capcolor
