#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pixtopo/grid.hpp"

namespace pixtopo::detail {

// Dense occupancy grid over a coordinate-compressed copy of an object.
//
// Distinct occupied columns keep their relative order; consecutive occupied
// columns stay consecutive and every run of empty columns between them
// collapses to a single empty column. Rows are treated the same way, and a
// one-cell empty frame surrounds everything. The compression preserves
// pixel adjacency (both kinds), complement connectivity (both kinds), and
// the incidence pattern at every corner, so all invariants computed on the
// raster equal those of the original object.
class Raster {
 public:
  explicit Raster(const DigitalObject& d);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  bool at(std::size_t col, std::size_t row) const { return cells_[row * width_ + col] != 0; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

 private:
  std::size_t width_ = 1;
  std::size_t height_ = 1;
  std::vector<std::uint8_t> cells_{0};
};

// Occupancy pattern of the four pixels around every lattice point.
struct CornerCensus {
  std::int64_t vertices = 0;  // points with >= 1 incident pixel
  std::int64_t blocks = 0;    // points with 4 incident pixels
  std::int64_t tunnels = 0;   // points with exactly a diagonal pair
};

CornerCensus corner_census(const Raster& r);

// Number of connected components of occupied cells.
std::int64_t count_foreground_components(const Raster& r, Adjacency a);

// Number of connected components of empty cells; the frame belongs to one of
// them.
std::int64_t count_background_components(const Raster& r, Adjacency a);

}  // namespace pixtopo::detail
