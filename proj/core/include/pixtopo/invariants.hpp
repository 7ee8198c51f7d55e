#pragma once

#include <cstdint>
#include <optional>

#include "pixtopo/grid.hpp"

namespace pixtopo {

// Topological counts of a digital object.
//
//   p          pixels
//   v          distinct pixel corners
//   c          0-connected components (the c of the tunnel formula)
//   c1         1-connected components; diagnostic only, absent when the
//              report comes from an incremental tracker
//   h          proper 1-holes (finite 1-components of the complement)
//   b          2-blocks (complete 2x2 squares)
//   t_direct   corners shared by exactly two diagonally placed pixels
//   t_formula  v - 2(p + c - h) + b
struct InvariantReport {
  std::int64_t p = 0;
  std::int64_t v = 0;
  std::int64_t c = 0;
  std::optional<std::int64_t> c1 = 0;
  std::int64_t h = 0;
  std::int64_t b = 0;
  std::int64_t t_direct = 0;
  std::int64_t t_formula = 0;
  bool consistent = true;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

std::int64_t count_pixels(const DigitalObject& d);
std::int64_t count_vertices(const DigitalObject& d);
std::int64_t count_blocks(const DigitalObject& d);
std::int64_t count_components(const DigitalObject& d, Adjacency a);
std::int64_t count_holes(const DigitalObject& d);
std::int64_t count_tunnels_direct(const DigitalObject& d);

// Signed on purpose: a negative result flags inconsistent inputs.
constexpr std::int64_t tunnels_by_formula(std::int64_t p, std::int64_t v, std::int64_t c,
                                          std::int64_t h, std::int64_t b) {
  return v - 2 * (p + c - h) + b;
}

InvariantReport analyze(const DigitalObject& d);

bool is_tunnel_free(const DigitalObject& d);

// True iff s \ m is not a-connected. Throws std::invalid_argument unless m is
// a subset of s.
bool is_k_separating(const DigitalObject& m, const DigitalObject& s, Adjacency a);

// True iff the complement has more 1-components than 0-components, i.e. some
// proper 1-hole leaks out through a diagonal contact.
bool has_separating_tunnels(const DigitalObject& d);

}  // namespace pixtopo
