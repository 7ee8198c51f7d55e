#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pixtopo/grid.hpp"

namespace pixtopo {

// Curve predicates are operational: "one-dimensional" is taken to mean
// "contains no 2-block", which every one-dimensional object satisfies.

// Nonempty, a-connected, block-free, at least 4 pixels, and every pixel has
// exactly two a-neighbors.
bool is_simple_closed_curve(const DigitalObject& d, Adjacency a);

// Nonempty, a-connected, block-free, and either a single pixel or exactly two
// pixels of a-degree one with all others of a-degree two.
bool is_simple_arc(const DigitalObject& d, Adjacency a);

// Nonempty, a-connected and block-free.
bool is_general_curve(const DigitalObject& d, Adjacency a);

struct IdentityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct CurveVerdict {
  Adjacency alpha = Adjacency::zero;
  bool is_simple_closed = false;
  bool is_simple_arc = false;
  bool is_general_curve = false;
  // One entry per curve identity whose hypothesis the object meets, evaluated
  // with measured counts.
  std::vector<IdentityCheck> identity_checks;

  bool all_identities_hold() const;
};

CurveVerdict curve_report(const DigitalObject& d, Adjacency a);

}  // namespace pixtopo
