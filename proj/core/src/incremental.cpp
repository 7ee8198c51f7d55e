#include "pixtopo/incremental.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace pixtopo {

namespace {

struct CaseRow {
  CaseId id;
  std::string_view name;
  int dc, dh, db;
  // Configurations (dv, dt) enumerated for the case.
  std::array<std::pair<int, int>, 2> listed;
  int listed_count;
};

// clang-format off
constexpr std::array<CaseRow, 24> kCases{{
    {CaseId::c1a,  "1a",   0,  0, 0, {{{2, 0},  {}}},       1},
    {CaseId::c1b,  "1b",   0,  0, 0, {{{3, 1},  {}}},       1},
    {CaseId::c1c,  "1c",   0,  0, 0, {{{1, -1}, {}}},       1},
    {CaseId::c1d,  "1d",   0,  0, 0, {{{0, -2}, {}}},       1},
    {CaseId::c2,   "2",    1,  0, 0, {{{4, 0},  {}}},       1},
    {CaseId::c3a,  "3a",  -1,  0, 0, {{{0, 0},  {2, 2}}},   2},
    {CaseId::c3b,  "3b",  -2,  0, 0, {{{1, 3},  {}}},       1},
    {CaseId::c3c,  "3c",  -3,  0, 0, {{{0, 4},  {}}},       1},
    {CaseId::c4,   "4",    0, -1, 0, {{{0, -4}, {}}},       1},
    {CaseId::c5a,  "5a",   0,  1, 0, {{{0, 0},  {1, 1}}},   2},
    {CaseId::c5b,  "5b",   0,  2, 0, {{{0, 2},  {1, 3}}},   2},
    {CaseId::c5c,  "5c",   0,  3, 0, {{{0, 4},  {}}},       1},
    {CaseId::c6a,  "6a",   0,  0, 1, {{{0, -1}, {}}},       1},
    {CaseId::c6b,  "6b",   0,  0, 1, {{{1, 0},  {}}},       1},
    {CaseId::c6c,  "6c",   0,  0, 2, {{{0, 0},  {}}},       1},
    {CaseId::c7,   "7",    0,  1, 1, {{{0, 1},  {}}},       1},
    {CaseId::c8a,  "8a",   0, -1, 1, {{{0, -3}, {}}},       1},
    {CaseId::c8b,  "8b",   0, -1, 2, {{{0, -2}, {}}},       1},
    {CaseId::c8c,  "8c",   0, -1, 3, {{{0, -1}, {}}},       1},
    {CaseId::c8d,  "8d",   0, -1, 4, {{{0, 0},  {}}},       1},
    {CaseId::c9,   "9",   -1,  0, 1, {{{0, 1},  {}}},       1},
    {CaseId::c10a, "10a", -1,  1, 0, {{{0, 2},  {1, 3}}},   2},
    {CaseId::c10b, "10b", -2,  1, 0, {{{0, 4},  {}}},       1},
    {CaseId::c10c, "10c", -1,  2, 0, {{{0, 4},  {}}},       1},
}};
// clang-format on

bool lists(const CaseRow& row, const InsertionDelta& d) {
  for (int k = 0; k < row.listed_count; ++k) {
    if (row.listed[k].first == d.dv && row.listed[k].second == d.dt) return true;
  }
  return false;
}

bool in_range(const InsertionDelta& d) {
  return d.dv >= 0 && d.dv <= 4 && d.dc >= -3 && d.dc <= 1 && d.dh >= -1 && d.dh <= 3 &&
         d.db >= 0 && d.db <= 4 && d.dt >= -4 && d.dt <= 4;
}

// Pixel sitting at `bit` of the mask of corner q.
constexpr PixelCoord pixel_at(LatticePoint q, int bit) {
  return {q.x - 1 + (bit & 1), q.y - 1 + (bit >> 1)};
}

constexpr bool is_tunnel_mask(std::uint8_t m) { return m == 0b1001 || m == 0b0110; }

}  // namespace

std::string_view to_string(CaseId id) {
  if (id == CaseId::unmatched) return "UNMATCHED";
  return kCases[static_cast<std::size_t>(id)].name;
}

CaseId classify_case(const InsertionDelta& d) {
  if (!is_balanced(d) || !in_range(d)) return CaseId::unmatched;
  const CaseRow* only = nullptr;
  int matches = 0;
  for (const CaseRow& row : kCases) {
    if (row.dc != d.dc || row.dh != d.dh || row.db != d.db) continue;
    // Signatures shared by several cases are split by (dv, dt).
    if (lists(row, d)) return row.id;
    only = &row;
    ++matches;
  }
  return matches == 1 ? only->id : CaseId::unmatched;
}

bool is_listed_configuration(const InsertionDelta& d) {
  const CaseId id = classify_case(d);
  return id != CaseId::unmatched && lists(kCases[static_cast<std::size_t>(id)], d);
}

DuplicatePixel::DuplicatePixel(PixelCoord p)
    : std::invalid_argument("pixel (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") is already present"),
      pixel(p) {}

std::uint8_t Tracker::corner_mask(LatticePoint q) const {
  const auto it = corners_.find(q);
  return it == corners_.end() ? 0 : it->second;
}

std::uint32_t Tracker::find(std::uint32_t n) {
  while (parent_[n] != n) {
    parent_[n] = parent_[parent_[n]];
    n = parent_[n];
  }
  return n;
}

InsertionDelta Tracker::add_pixel(PixelCoord p) {
  if (contains(p)) throw DuplicatePixel(p);

  const auto cs = corners(p);
  std::array<std::uint8_t, 4> before{};
  std::array<std::uint8_t, 4> own{};
  std::array<PixelCoord, 12> touching{};
  std::size_t touching_count = 0;

  InsertionDelta d;
  for (std::size_t k = 0; k < 4; ++k) {
    const LatticePoint q = cs[k];
    own[k] = static_cast<std::uint8_t>(1u << ((p.x - q.x + 1) | ((p.y - q.y + 1) << 1)));
    before[k] = corner_mask(q);
    const std::uint8_t after = before[k] | own[k];
    d.dv += before[k] == 0;
    d.db += after == 0xF;
    d.dt += int{is_tunnel_mask(after)} - int{is_tunnel_mask(before[k])};
    for (int bit = 0; bit < 4; ++bit) {
      if (before[k] & (1u << bit)) touching[touching_count++] = pixel_at(q, bit);
    }
  }

  if ((d.dt - d.dv - d.db) % 2 != 0)
    throw InvariantBreach("odd change of t - v - b on insertion");

  for (std::size_t k = 0; k < 4; ++k) corners_[cs[k]] = before[k] | own[k];

  const auto node = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(node);
  node_of_.emplace(p, node);
  order_.push_back(p);

  std::array<std::uint32_t, 12> roots{};
  std::size_t root_count = 0;
  for (std::size_t k = 0; k < touching_count; ++k) {
    const std::uint32_t r = find(node_of_.at(touching[k]));
    if (std::find(roots.begin(), roots.begin() + root_count, r) == roots.begin() + root_count)
      roots[root_count++] = r;
  }
  for (std::size_t k = 0; k < root_count; ++k) parent_[roots[k]] = node;

  d.dc = 1 - static_cast<int>(root_count);
  d.dh = (d.dt - d.dv - d.db) / 2 + 1 + d.dc;

  ++p_;
  v_ += d.dv;
  b_ += d.db;
  t_ += d.dt;
  c_ += d.dc;
  return d;
}

InvariantReport Tracker::snapshot() const {
  const std::int64_t excess = t_ - v_ - b_;
  if (excess % 2 != 0) throw InvariantBreach("t - v - b is odd");
  InvariantReport r;
  r.p = p_;
  r.v = v_;
  r.b = b_;
  r.c = c_;
  r.c1 = std::nullopt;
  r.h = p_ + c_ + excess / 2;
  if (r.h < 0) throw InvariantBreach("derived hole count is negative");
  r.t_direct = t_;
  r.t_formula = tunnels_by_formula(r.p, r.v, r.c, r.h, r.b);
  r.consistent = r.t_direct == r.t_formula;
  return r;
}

DigitalObject Tracker::pixels() const { return DigitalObject(order_); }

}  // namespace pixtopo
