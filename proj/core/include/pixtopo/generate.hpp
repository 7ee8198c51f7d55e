#pragma once

#include <cstdint>
#include <stdexcept>

#include "pixtopo/grid.hpp"

namespace pixtopo {

// Seeded fixture generators. All randomness comes from std::mt19937_64
// seeded with `seed`; the standard fixes its output sequence, and the
// generators below consume it in a documented order so fixtures are
// reproducible anywhere.

inline constexpr std::int64_t kDefaultCellCap = 10'000'000;
inline constexpr int kMaxCurveSteps = 1 << 16;
inline constexpr int kMaxGenerationAttempts = 1000;

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cells are visited in row-major order (y outer, x inner); each consumes one
// 64-bit draw r and is a pixel iff (r >> 11) * 2^-53 < density.
// Throws SizeError if width * height exceeds cell_cap, std::invalid_argument
// for non-positive dimensions or density outside [0, 1].
DigitalObject generate_random(int width, int height, double density, std::uint64_t seed,
                              std::int64_t cell_cap = kDefaultCellCap);

enum class CurveKind {
  closed,   // simple closed curve
  arc,      // simple arc
  general,  // connected, block-free, otherwise unconstrained
};

// closed:  `steps` is the face count of a random polyomino whose boundary is
//          digitized (at scale 1 when that already gives a valid 0-curve,
//          otherwise at scale 2 with edge midpoints); 0-curves use the
//          boundary rotated by 45 degrees. steps == 1 gives the 4-pixel
//          diamond (ZERO) or the 8-pixel ring (ONE).
// arc:     self-avoiding walk of `steps` pixels in which each new pixel
//          touches no earlier pixel except its predecessor.
// general: random growth to `steps` pixels that never completes a 2-block.
//
// Candidates are rejected until the matching predicate holds; after
// kMaxGenerationAttempts rejections GenerationError is thrown. The result is
// translated so its bounding box starts at (0, 0).
DigitalObject generate_curve(CurveKind kind, Adjacency a, int steps, std::uint64_t seed);

}  // namespace pixtopo
