#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace pixtopo {

// A unit pixel, identified by its lower-left corner on Z^2.
struct PixelCoord {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr bool operator==(const PixelCoord&, const PixelCoord&) = default;
  // Row-major order: by y, then by x.
  friend constexpr std::strong_ordering operator<=>(const PixelCoord& a, const PixelCoord& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// A point of the lattice on which pixel corners live.
struct LatticePoint {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// ZERO: pixels share at least a vertex (8-neighborhood).
// ONE: pixels share an edge (4-neighborhood).
enum class Adjacency : std::uint8_t { zero = 0, one = 1 };

namespace detail {
constexpr std::uint64_t pack(std::int32_t x, std::int32_t y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

struct PixelHash {
  std::size_t operator()(const PixelCoord& p) const noexcept {
    return static_cast<std::size_t>(detail::mix(detail::pack(p.x, p.y)));
  }
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    return static_cast<std::size_t>(detail::mix(detail::pack(p.x, p.y)));
  }
};

struct BoundingBox {
  PixelCoord min;
  PixelCoord max;

  std::int64_t width() const { return std::int64_t{max.x} - min.x + 1; }
  std::int64_t height() const { return std::int64_t{max.y} - min.y + 1; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// A finite set of pixels. Immutable once built; iteration is sorted by (y, x)
// and membership is a hash lookup.
class DigitalObject {
 public:
  using const_iterator = std::vector<PixelCoord>::const_iterator;

  DigitalObject() = default;
  explicit DigitalObject(std::vector<PixelCoord> pixels);
  DigitalObject(std::initializer_list<PixelCoord> pixels);

  bool contains(PixelCoord p) const { return index_.contains(p); }
  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }

  std::span<const PixelCoord> pixels() const { return sorted_; }
  const_iterator begin() const { return sorted_.begin(); }
  const_iterator end() const { return sorted_.end(); }

  friend bool operator==(const DigitalObject& a, const DigitalObject& b) {
    return a.sorted_ == b.sorted_;
  }

 private:
  std::vector<PixelCoord> sorted_;
  std::unordered_set<PixelCoord, PixelHash> index_;
};

DigitalObject from_pixels(std::span<const PixelCoord> coords);

// Corners in the order (x,y), (x+1,y), (x,y+1), (x+1,y+1).
constexpr std::array<LatticePoint, 4> corners(PixelCoord p) {
  return {LatticePoint{p.x, p.y}, LatticePoint{p.x + 1, p.y}, LatticePoint{p.x, p.y + 1},
          LatticePoint{p.x + 1, p.y + 1}};
}

// Offsets of the neighborhood for the given adjacency (4 or 8 entries).
std::span<const PixelCoord> neighbor_offsets(Adjacency a);

std::vector<PixelCoord> neighbors(PixelCoord p, Adjacency a);

constexpr bool adjacent(PixelCoord p, PixelCoord q, Adjacency a) {
  const std::int64_t dx = std::int64_t{p.x} - q.x;
  const std::int64_t dy = std::int64_t{p.y} - q.y;
  const std::int64_t adx = dx < 0 ? -dx : dx;
  const std::int64_t ady = dy < 0 ? -dy : dy;
  if (a == Adjacency::one) return adx + ady == 1;
  return (adx | ady) != 0 && adx <= 1 && ady <= 1;
}

std::optional<BoundingBox> bounding_box(const DigitalObject& d);

}  // namespace pixtopo
