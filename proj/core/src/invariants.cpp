#include "pixtopo/invariants.hpp"

#include <stdexcept>
#include <vector>

#include "raster.hpp"

namespace pixtopo {

std::int64_t count_pixels(const DigitalObject& d) { return static_cast<std::int64_t>(d.size()); }

std::int64_t count_vertices(const DigitalObject& d) {
  return detail::corner_census(detail::Raster(d)).vertices;
}

std::int64_t count_blocks(const DigitalObject& d) {
  return detail::corner_census(detail::Raster(d)).blocks;
}

std::int64_t count_tunnels_direct(const DigitalObject& d) {
  return detail::corner_census(detail::Raster(d)).tunnels;
}

std::int64_t count_components(const DigitalObject& d, Adjacency a) {
  if (d.empty()) return 0;
  return detail::count_foreground_components(detail::Raster(d), a);
}

std::int64_t count_holes(const DigitalObject& d) {
  // Exactly one background component touches the frame: the improper hole.
  return detail::count_background_components(detail::Raster(d), Adjacency::one) - 1;
}

InvariantReport analyze(const DigitalObject& d) {
  InvariantReport r;
  if (d.empty()) return r;
  const detail::Raster raster(d);
  const detail::CornerCensus census = detail::corner_census(raster);
  r.p = count_pixels(d);
  r.v = census.vertices;
  r.b = census.blocks;
  r.t_direct = census.tunnels;
  r.c = detail::count_foreground_components(raster, Adjacency::zero);
  r.c1 = detail::count_foreground_components(raster, Adjacency::one);
  r.h = detail::count_background_components(raster, Adjacency::one) - 1;
  r.t_formula = tunnels_by_formula(r.p, r.v, r.c, r.h, r.b);
  r.consistent = r.t_direct == r.t_formula;
  return r;
}

bool is_tunnel_free(const DigitalObject& d) { return count_tunnels_direct(d) == 0; }

bool is_k_separating(const DigitalObject& m, const DigitalObject& s, Adjacency a) {
  std::vector<PixelCoord> rest;
  rest.reserve(s.size());
  for (const PixelCoord p : m) {
    if (!s.contains(p)) throw std::invalid_argument("is_k_separating: M is not a subset of S");
  }
  for (const PixelCoord p : s) {
    if (!m.contains(p)) rest.push_back(p);
  }
  return count_components(DigitalObject(std::move(rest)), a) >= 2;
}

bool has_separating_tunnels(const DigitalObject& d) {
  const detail::Raster raster(d);
  return detail::count_background_components(raster, Adjacency::one) >
         detail::count_background_components(raster, Adjacency::zero);
}

}  // namespace pixtopo
