#include "pixtopo/generate.hpp"

#include <array>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pixtopo/curves.hpp"

namespace pixtopo {

namespace {

using Rng = std::mt19937_64;
using PixelSet = std::unordered_set<PixelCoord, PixelHash>;

constexpr std::array<PixelCoord, 4> kSteps4{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

PixelCoord plus(PixelCoord p, PixelCoord off) { return {p.x + off.x, p.y + off.y}; }

DigitalObject normalized(const std::vector<PixelCoord>& pixels) {
  const DigitalObject raw(pixels);
  const auto box = bounding_box(raw);
  if (!box) return raw;
  std::vector<PixelCoord> moved;
  moved.reserve(raw.size());
  for (const PixelCoord p : raw) moved.push_back({p.x - box->min.x, p.y - box->min.y});
  return DigitalObject(std::move(moved));
}

// Random 4-connected set of `count` unit faces containing (0, 0).
std::vector<PixelCoord> grow_polyomino(int count, Rng& rng) {
  std::vector<PixelCoord> faces{{0, 0}};
  PixelSet present{{0, 0}};
  while (static_cast<int>(faces.size()) < count) {
    const PixelCoord from = faces[pick(rng, faces.size())];
    const PixelCoord next = plus(from, kSteps4[pick(rng, 4)]);
    if (present.insert(next).second) faces.push_back(next);
  }
  return faces;
}

// Pixels along the boundary of a union of faces. Face (i, j) spans lattice
// vertices (i..i+1, j..j+1); vertex V becomes pixel scale*V and, at scale 2,
// each boundary edge also contributes its midpoint. ZERO curves are rotated
// by 45 degrees so boundary steps become diagonal.
std::vector<PixelCoord> boundary_pixels(const std::vector<PixelCoord>& faces, int scale,
                                        Adjacency a) {
  const PixelSet present(faces.begin(), faces.end());
  PixelSet out;
  const auto emit = [&](std::int32_t x, std::int32_t y) {
    if (a == Adjacency::zero) {
      out.insert({x - y, x + y});
    } else {
      out.insert({x, y});
    }
  };
  for (const PixelCoord f : faces) {
    // Each edge as (neighbor offset, first vertex, second vertex).
    const std::array<std::array<PixelCoord, 3>, 4> edges{{
        {{{0, -1}, {f.x, f.y}, {f.x + 1, f.y}}},
        {{{1, 0}, {f.x + 1, f.y}, {f.x + 1, f.y + 1}}},
        {{{0, 1}, {f.x, f.y + 1}, {f.x + 1, f.y + 1}}},
        {{{-1, 0}, {f.x, f.y}, {f.x, f.y + 1}}},
    }};
    for (const auto& [off, u, w] : edges) {
      if (present.contains(plus(f, off))) continue;
      emit(scale * u.x, scale * u.y);
      emit(scale * w.x, scale * w.y);
      if (scale == 2) emit(u.x + w.x, u.y + w.y);
    }
  }
  return {out.begin(), out.end()};
}

DigitalObject closed_curve(Adjacency a, int steps, Rng& rng) {
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    const auto faces = grow_polyomino(steps, rng);
    for (const int scale : {1, 2}) {
      // Scale-1 boundaries can pinch the interior of a 1-curve; only 0-curves
      // try them.
      if (scale == 1 && a == Adjacency::one) continue;
      DigitalObject candidate = normalized(boundary_pixels(faces, scale, a));
      if (is_simple_closed_curve(candidate, a)) return candidate;
    }
  }
  throw GenerationError("closed curve generation gave up after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts");
}

DigitalObject arc(Adjacency a, int steps, Rng& rng) {
  const auto offsets = neighbor_offsets(a);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    std::vector<PixelCoord> path{{0, 0}};
    PixelSet used{{0, 0}};
    while (static_cast<int>(path.size()) < steps) {
      const PixelCoord tail = path.back();
      std::vector<PixelCoord> options;
      for (const PixelCoord off : offsets) {
        const PixelCoord c = plus(tail, off);
        if (used.contains(c)) continue;
        bool touches_other = false;
        for (const PixelCoord o : offsets) {
          const PixelCoord n = plus(c, o);
          if (n != tail && used.contains(n)) {
            touches_other = true;
            break;
          }
        }
        if (!touches_other) options.push_back(c);
      }
      if (options.empty()) break;
      const PixelCoord next = options[pick(rng, options.size())];
      path.push_back(next);
      used.insert(next);
    }
    if (static_cast<int>(path.size()) < steps) continue;
    DigitalObject candidate = normalized(path);
    if (is_simple_arc(candidate, a)) return candidate;
  }
  throw GenerationError("arc generation gave up after " + std::to_string(kMaxGenerationAttempts) +
                        " attempts");
}

bool completes_block(const PixelSet& s, PixelCoord c) {
  for (const int dx : {-1, 0}) {
    for (const int dy : {-1, 0}) {
      int present = 0;
      for (const int ox : {0, 1}) {
        for (const int oy : {0, 1}) {
          const PixelCoord q{c.x + dx + ox, c.y + dy + oy};
          present += q == c || s.contains(q);
        }
      }
      if (present == 4) return true;
    }
  }
  return false;
}

DigitalObject general_curve(Adjacency a, int steps, Rng& rng) {
  const auto offsets = neighbor_offsets(a);
  std::vector<PixelCoord> pixels{{0, 0}};
  PixelSet used{{0, 0}};
  // Each rejected growth step counts as one attempt.
  int rejections = 0;
  while (static_cast<int>(pixels.size()) < steps) {
    const PixelCoord from = pixels[pick(rng, pixels.size())];
    const PixelCoord next = plus(from, offsets[pick(rng, offsets.size())]);
    if (used.contains(next) || completes_block(used, next)) {
      if (++rejections > kMaxGenerationAttempts * steps)
        throw GenerationError("general curve generation gave up");
      continue;
    }
    pixels.push_back(next);
    used.insert(next);
  }
  DigitalObject out = normalized(pixels);
  if (!is_general_curve(out, a)) throw GenerationError("generated object is not a general curve");
  return out;
}

}  // namespace

DigitalObject generate_random(int width, int height, double density, std::uint64_t seed,
                              std::int64_t cell_cap) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("grid dimensions must be positive");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  if (std::int64_t{width} * height > cell_cap)
    throw SizeError("grid of " + std::to_string(std::int64_t{width} * height) +
                    " cells exceeds cap of " + std::to_string(cell_cap));
  Rng rng(seed);
  std::vector<PixelCoord> pixels;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pixels.push_back({x, y});
    }
  }
  return DigitalObject(std::move(pixels));
}

DigitalObject generate_curve(CurveKind kind, Adjacency a, int steps, std::uint64_t seed) {
  if (steps < 1 || steps > kMaxCurveSteps)
    throw std::invalid_argument("steps must lie in [1, " + std::to_string(kMaxCurveSteps) + "]");
  Rng rng(seed);
  switch (kind) {
    case CurveKind::closed:
      return closed_curve(a, steps, rng);
    case CurveKind::arc:
      return arc(a, steps, rng);
    case CurveKind::general:
      return general_curve(a, steps, rng);
  }
  throw std::invalid_argument("unknown curve kind");
}

}  // namespace pixtopo
