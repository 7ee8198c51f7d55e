#include "raster.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pixtopo::detail {

namespace {

struct AxisMap {
  std::vector<std::int32_t> values;  // sorted distinct occupied coordinates
  std::vector<std::size_t> index;    // compressed position of values[k]
  std::size_t extent = 0;            // compressed length including the frame

  std::size_t operator()(std::int32_t v) const {
    const auto it = std::lower_bound(values.begin(), values.end(), v);
    return index[static_cast<std::size_t>(it - values.begin())];
  }
};

AxisMap compress_axis(std::vector<std::int32_t> coords) {
  AxisMap m;
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  m.values = std::move(coords);
  m.index.resize(m.values.size());
  std::size_t next = 1;
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    if (k > 0 && std::int64_t{m.values[k]} != std::int64_t{m.values[k - 1]} + 1) ++next;
    m.index[k] = next++;
  }
  m.extent = next + 1;
  return m;
}

// Flood-fill labelling; `target` selects occupied (1) or empty (0) cells.
std::int64_t count_components(const Raster& r, Adjacency a, std::uint8_t target) {
  const std::size_t w = r.width();
  const std::size_t h = r.height();
  const auto& cells = r.cells();
  std::vector<std::uint8_t> seen(cells.size(), 0);
  std::vector<std::size_t> stack;

  static constexpr std::array<std::array<int, 2>, 8> kSteps{{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
  const std::size_t steps = a == Adjacency::one ? 4 : 8;

  std::int64_t components = 0;
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (seen[start] || cells[start] != target) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      const std::size_t cx = cur % w;
      const std::size_t cy = cur / w;
      for (std::size_t s = 0; s < steps; ++s) {
        const auto nx = static_cast<std::ptrdiff_t>(cx) + kSteps[s][0];
        const auto ny = static_cast<std::ptrdiff_t>(cy) + kSteps[s][1];
        if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(w) ||
            ny >= static_cast<std::ptrdiff_t>(h))
          continue;
        const std::size_t n = static_cast<std::size_t>(ny) * w + static_cast<std::size_t>(nx);
        if (seen[n] || cells[n] != target) continue;
        seen[n] = 1;
        stack.push_back(n);
      }
    }
  }
  return components;
}

}  // namespace

Raster::Raster(const DigitalObject& d) {
  if (d.empty()) return;
  std::vector<std::int32_t> xs;
  std::vector<std::int32_t> ys;
  xs.reserve(d.size());
  ys.reserve(d.size());
  for (const PixelCoord p : d) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const AxisMap cols = compress_axis(std::move(xs));
  const AxisMap rows = compress_axis(std::move(ys));
  width_ = cols.extent;
  height_ = rows.extent;
  if (height_ != 0 && width_ > cells_.max_size() / height_)
    throw std::length_error("pixtopo: compressed raster too large");
  cells_.assign(width_ * height_, 0);
  for (const PixelCoord p : d) cells_[rows(p.y) * width_ + cols(p.x)] = 1;
}

CornerCensus corner_census(const Raster& r) {
  CornerCensus census;
  const std::size_t w = r.width();
  const std::size_t h = r.height();
  // Lattice point (i, j) sits between cells (i-1..i, j-1..j). The frame is
  // empty, so points on the outer boundary never see an occupied cell.
  for (std::size_t j = 1; j < h; ++j) {
    for (std::size_t i = 1; i < w; ++i) {
      const bool ll = r.at(i - 1, j - 1);
      const bool lr = r.at(i, j - 1);
      const bool ul = r.at(i - 1, j);
      const bool ur = r.at(i, j);
      const int n = ll + lr + ul + ur;
      if (n == 0) continue;
      ++census.vertices;
      if (n == 4) ++census.blocks;
      if (n == 2 && ll == ur) ++census.tunnels;
    }
  }
  return census;
}

std::int64_t count_foreground_components(const Raster& r, Adjacency a) {
  return count_components(r, a, 1);
}

std::int64_t count_background_components(const Raster& r, Adjacency a) {
  return count_components(r, a, 0);
}

}  // namespace pixtopo::detail
