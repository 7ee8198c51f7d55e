#include "pixtopo/grid.hpp"

#include <algorithm>

namespace pixtopo {

namespace {
constexpr std::array<PixelCoord, 8> kZeroOffsets{
    PixelCoord{1, 0},  PixelCoord{-1, 0}, PixelCoord{0, 1},  PixelCoord{0, -1},
    PixelCoord{1, 1},  PixelCoord{-1, 1}, PixelCoord{1, -1}, PixelCoord{-1, -1}};
}  // namespace

DigitalObject::DigitalObject(std::vector<PixelCoord> pixels) : sorted_(std::move(pixels)) {
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  index_.reserve(sorted_.size());
  index_.insert(sorted_.begin(), sorted_.end());
}

DigitalObject::DigitalObject(std::initializer_list<PixelCoord> pixels)
    : DigitalObject(std::vector<PixelCoord>(pixels)) {}

DigitalObject from_pixels(std::span<const PixelCoord> coords) {
  return DigitalObject(std::vector<PixelCoord>(coords.begin(), coords.end()));
}

std::span<const PixelCoord> neighbor_offsets(Adjacency a) {
  if (a == Adjacency::one) return std::span<const PixelCoord>(kZeroOffsets).first(4);
  return kZeroOffsets;
}

std::vector<PixelCoord> neighbors(PixelCoord p, Adjacency a) {
  std::vector<PixelCoord> out;
  for (const PixelCoord off : neighbor_offsets(a)) out.push_back({p.x + off.x, p.y + off.y});
  return out;
}

std::optional<BoundingBox> bounding_box(const DigitalObject& d) {
  if (d.empty()) return std::nullopt;
  // Sorted by (y, x): y range comes from the ends.
  BoundingBox box{d.pixels().front(), d.pixels().back()};
  box.min.x = box.max.x = d.pixels().front().x;
  for (const PixelCoord p : d) {
    box.min.x = std::min(box.min.x, p.x);
    box.max.x = std::max(box.max.x, p.x);
  }
  return box;
}

}  // namespace pixtopo
