#include "pixtopo/curves.hpp"

#include <algorithm>

#include "pixtopo/invariants.hpp"

namespace pixtopo {

namespace {

struct Shape {
  bool connected_block_free = false;
  std::size_t degree_one = 0;
  std::size_t degree_two = 0;
};

Shape inspect(const DigitalObject& d, Adjacency a) {
  Shape s;
  if (d.empty() || count_components(d, a) != 1 || count_blocks(d) != 0) return s;
  s.connected_block_free = true;
  for (const PixelCoord p : d) {
    int degree = 0;
    for (const PixelCoord off : neighbor_offsets(a)) degree += d.contains({p.x + off.x, p.y + off.y});
    s.degree_one += degree == 1;
    s.degree_two += degree == 2;
  }
  return s;
}

bool closed_from(const Shape& s, std::size_t size) {
  return s.connected_block_free && size >= 4 && s.degree_two == size;
}

bool arc_from(const Shape& s, std::size_t size) {
  if (!s.connected_block_free) return false;
  return size == 1 || (s.degree_one == 2 && s.degree_two == size - 2);
}

void check(CurveVerdict& v, std::string name, std::int64_t lhs, std::int64_t rhs) {
  v.identity_checks.push_back({std::move(name), lhs, rhs, lhs == rhs});
}

}  // namespace

bool is_simple_closed_curve(const DigitalObject& d, Adjacency a) {
  return closed_from(inspect(d, a), d.size());
}

bool is_simple_arc(const DigitalObject& d, Adjacency a) { return arc_from(inspect(d, a), d.size()); }

bool is_general_curve(const DigitalObject& d, Adjacency a) {
  return inspect(d, a).connected_block_free;
}

bool CurveVerdict::all_identities_hold() const {
  return std::all_of(identity_checks.begin(), identity_checks.end(),
                     [](const IdentityCheck& c) { return c.holds; });
}

CurveVerdict curve_report(const DigitalObject& d, Adjacency a) {
  CurveVerdict v;
  v.alpha = a;
  const Shape s = inspect(d, a);
  v.is_general_curve = s.connected_block_free;
  v.is_simple_closed = closed_from(s, d.size());
  v.is_simple_arc = arc_from(s, d.size());
  if (!v.is_general_curve) return v;

  const InvariantReport r = analyze(d);
  const std::int64_t t = r.t_direct;
  const bool tunnel_free = t == 0;
  check(v, "t = v - 2(p + 1 - h)", t, r.v - 2 * (r.p + 1 - r.h));
  if (tunnel_free) check(v, "v = 2(p + 1 - h)", r.v, 2 * (r.p + 1 - r.h));
  if (v.is_simple_arc) {
    check(v, "t = v - 2(p + 1)", t, r.v - 2 * (r.p + 1));
    if (tunnel_free) check(v, "v = 2(p + 1)", r.v, 2 * (r.p + 1));
  }
  if (v.is_simple_closed) {
    check(v, "t = v - 2p", t, r.v - 2 * r.p);
    if (tunnel_free) check(v, "v = 2p", r.v, 2 * r.p);
  }
  return v;
}

}  // namespace pixtopo
