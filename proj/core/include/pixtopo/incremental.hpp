#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pixtopo/grid.hpp"
#include "pixtopo/invariants.hpp"

namespace pixtopo {

// Change of the counts caused by inserting one pixel (dp is always +1).
struct InsertionDelta {
  int dv = 0;
  int dc = 0;
  int dh = 0;
  int db = 0;
  int dt = 0;

  friend bool operator==(const InsertionDelta&, const InsertionDelta&) = default;
};

// dv - 2(1 + dc - dh) + db - dt == 0
constexpr bool is_balanced(const InsertionDelta& d) {
  return d.dv - 2 * (1 + d.dc - d.dh) + d.db - d.dt == 0;
}

// The ways a single insertion can change the counts, grouped
// by the (dc, dh, db) signature and split by (dv, dt) inside case 1 and 6.
enum class CaseId : std::uint8_t {
  c1a, c1b, c1c, c1d,
  c2,
  c3a, c3b, c3c,
  c4,
  c5a, c5b, c5c,
  c6a, c6b, c6c,
  c7,
  c8a, c8b, c8c, c8d,
  c9,
  c10a, c10b, c10c,
  unmatched,
};

inline constexpr std::size_t kCaseCount = static_cast<std::size_t>(CaseId::unmatched) + 1;

std::string_view to_string(CaseId id);

CaseId classify_case(const InsertionDelta& d);

// True iff (dv, dt) is one of the configurations enumerated for the case.
// Several cases admit further configurations with the same (dc, dh, db)
// signature; they classify to the same CaseId but are not "listed".
bool is_listed_configuration(const InsertionDelta& d);

// Insertion never lowers b, never raises both h and c, never raises both b
// and c, and never lowers h while changing c.
constexpr bool violates_forbidden_transitions(const InsertionDelta& d) {
  return d.db < 0 || (d.dh > 0 && d.dc > 0) || (d.db > 0 && d.dc > 0) ||
         (d.dh < 0 && d.dc != 0);
}

class DuplicatePixel : public std::invalid_argument {
 public:
  explicit DuplicatePixel(PixelCoord p);
  PixelCoord pixel;
};

// Raised by snapshot() when the tracked counts cannot come from any object.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Maintains p, v, b, t and c (0-components) under pixel insertion with work
// bounded by the 3x3 neighborhood of the new pixel plus union-find. The hole
// count is never traversed; it follows from the tunnel formula.
class Tracker {
 public:
  Tracker() = default;

  // Throws DuplicatePixel (state unchanged) if p is already present.
  InsertionDelta add_pixel(PixelCoord p);

  InvariantReport snapshot() const;

  bool contains(PixelCoord p) const { return node_of_.contains(p); }
  std::int64_t pixel_count() const { return p_; }
  std::int64_t vertex_count() const { return v_; }
  std::int64_t block_count() const { return b_; }
  std::int64_t tunnel_count() const { return t_; }
  std::int64_t component_count() const { return c_; }

  // Occupancy mask of the four pixels around a corner, 0 if untouched.
  // Bit 0: (x-1, y-1), bit 1: (x, y-1), bit 2: (x-1, y), bit 3: (x, y).
  std::uint8_t corner_mask(LatticePoint q) const;
  std::size_t corner_count() const { return corners_.size(); }

  DigitalObject pixels() const;

 private:
  std::uint32_t find(std::uint32_t n);

  std::unordered_map<LatticePoint, std::uint8_t, LatticePointHash> corners_;
  std::unordered_map<PixelCoord, std::uint32_t, PixelHash> node_of_;
  std::vector<std::uint32_t> parent_;
  std::vector<PixelCoord> order_;

  std::int64_t p_ = 0;
  std::int64_t v_ = 0;
  std::int64_t b_ = 0;
  std::int64_t t_ = 0;
  std::int64_t c_ = 0;
};

}  // namespace pixtopo
