#include <gtest/gtest.h>

#include <random>

#include "pixtopo/curves.hpp"
#include "pixtopo/generate.hpp"
#include "pixtopo/invariants.hpp"

namespace pixtopo {
namespace {

const DigitalObject kDiamond{{1, 0}, {0, 1}, {2, 1}, {1, 2}};
const DigitalObject kRing{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
const DigitalObject kSquare2{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const DigitalObject kDomino{{0, 0}, {1, 0}};
const DigitalObject kStaircase{{0, 0}, {1, 1}, {2, 2}};

DigitalObject figure_eight() {
  std::vector<PixelCoord> px(kRing.begin(), kRing.end());
  for (const PixelCoord p : kRing) px.push_back({p.x + 2, p.y + 2});
  return DigitalObject(std::move(px));
}

const IdentityCheck* find_check(const CurveVerdict& v, std::string_view name) {
  for (const auto& c : v.identity_checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(SimpleClosedCurve, Examples) {
  EXPECT_TRUE(is_simple_closed_curve(kDiamond, Adjacency::zero));
  EXPECT_TRUE(is_simple_closed_curve(kRing, Adjacency::one));
  EXPECT_FALSE(is_simple_closed_curve(kSquare2, Adjacency::one));
}

TEST(SimpleClosedCurve, RejectsWrongAdjacencyAndSmallSets) {
  // Under ZERO the ring's corner pixels see three neighbors.
  EXPECT_FALSE(is_simple_closed_curve(kRing, Adjacency::zero));
  EXPECT_FALSE(is_simple_closed_curve(kDiamond, Adjacency::one));
  EXPECT_FALSE(is_simple_closed_curve(DigitalObject{{0, 0}, {1, 0}, {0, 1}}, Adjacency::zero));
  EXPECT_FALSE(is_simple_closed_curve(DigitalObject{}, Adjacency::zero));
}

TEST(SimpleArc, Examples) {
  EXPECT_TRUE(is_simple_arc(DigitalObject{{0, 0}}, Adjacency::zero));
  EXPECT_TRUE(is_simple_arc(DigitalObject{{0, 0}}, Adjacency::one));
  EXPECT_TRUE(is_simple_arc(kStaircase, Adjacency::zero));
  EXPECT_FALSE(is_simple_arc(kDiamond, Adjacency::zero));
}

TEST(SimpleArc, TwoPixelsAreAnArc) {
  EXPECT_TRUE(is_simple_arc(kDomino, Adjacency::one));
  EXPECT_TRUE(is_simple_arc(DigitalObject{{0, 0}, {1, 1}}, Adjacency::zero));
  EXPECT_FALSE(is_simple_arc(DigitalObject{{0, 0}, {1, 1}}, Adjacency::one));
}

TEST(GeneralCurve, Examples) {
  EXPECT_TRUE(is_general_curve(kDiamond, Adjacency::zero));
  EXPECT_TRUE(is_general_curve(kStaircase, Adjacency::zero));
  EXPECT_TRUE(is_general_curve(figure_eight(), Adjacency::one));
  EXPECT_FALSE(is_simple_closed_curve(figure_eight(), Adjacency::one));
  EXPECT_FALSE(is_simple_arc(figure_eight(), Adjacency::one));
  EXPECT_FALSE(is_general_curve(kSquare2, Adjacency::zero));
  EXPECT_FALSE(is_general_curve(DigitalObject{}, Adjacency::one));
}

TEST(CurveReport, DiamondSatisfiesClosedCurveIdentity) {
  const CurveVerdict v = curve_report(kDiamond, Adjacency::zero);
  EXPECT_TRUE(v.is_simple_closed);
  EXPECT_FALSE(v.is_simple_arc);
  EXPECT_TRUE(v.is_general_curve);
  const IdentityCheck* c = find_check(v, "t = v - 2p");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->lhs, 4);
  EXPECT_EQ(c->rhs, 12 - 8);
  EXPECT_TRUE(c->holds);
  EXPECT_EQ(find_check(v, "v = 2p"), nullptr);
  EXPECT_TRUE(v.all_identities_hold());
}

TEST(CurveReport, RingIsTunnelFreeClosedCurve) {
  const CurveVerdict v = curve_report(kRing, Adjacency::one);
  const IdentityCheck* c = find_check(v, "v = 2p");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->lhs, 16);
  EXPECT_EQ(c->rhs, 16);
  EXPECT_TRUE(v.all_identities_hold());
}

TEST(CurveReport, DominoIsTunnelFreeArc) {
  const CurveVerdict v = curve_report(kDomino, Adjacency::one);
  EXPECT_TRUE(v.is_simple_arc);
  const IdentityCheck* c = find_check(v, "v = 2(p + 1)");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->lhs, 6);
  EXPECT_EQ(c->rhs, 6);
  EXPECT_TRUE(v.all_identities_hold());
}

TEST(CurveReport, NonCurveHasNoIdentities) {
  const CurveVerdict v = curve_report(kSquare2, Adjacency::one);
  EXPECT_FALSE(v.is_general_curve);
  EXPECT_TRUE(v.identity_checks.empty());
}

// A 1-arc whose endpoints touch diagonally encloses a hole. The arc-specific
// identity assumes h = 0 and fails; the general one holds.
TEST(CurveReport, OneArcClosingDiagonallyBreaksArcIdentity) {
  std::vector<PixelCoord> px;
  for (const PixelCoord p : kRing)
    if (p != PixelCoord{0, 0}) px.push_back(p);
  const DigitalObject arc(px);
  const CurveVerdict v = curve_report(arc, Adjacency::one);
  ASSERT_TRUE(v.is_simple_arc);
  const InvariantReport r = analyze(arc);
  EXPECT_EQ(r.h, 1);
  EXPECT_EQ(r.t_direct, 1);
  EXPECT_EQ(r.v, 15);
  EXPECT_FALSE(find_check(v, "t = v - 2(p + 1)")->holds);
  EXPECT_TRUE(find_check(v, "t = v - 2(p + 1 - h)")->holds);
}

// A simple closed 1-curve whose interior is pinched into two 1-holes.
TEST(CurveReport, PinchedOneCurveBreaksClosedIdentity) {
  const DigitalObject hourglass{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2},
                                {3, 3}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}};
  const CurveVerdict v = curve_report(hourglass, Adjacency::one);
  ASSERT_TRUE(v.is_simple_closed);
  const InvariantReport r = analyze(hourglass);
  EXPECT_EQ(r.h, 2);
  EXPECT_EQ(r.t_direct, 1);
  EXPECT_EQ(r.v, 23);
  EXPECT_FALSE(find_check(v, "t = v - 2p")->holds);
  EXPECT_TRUE(find_check(v, "t = v - 2(p + 1 - h)")->holds);
}

TEST(CurveProperties, GeneratedFixturesSatisfyPredicatesAndInvariants) {
  for (const Adjacency a : {Adjacency::zero, Adjacency::one}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const DigitalObject closed = generate_curve(CurveKind::closed, a, 1 + seed % 9, seed);
      const DigitalObject arc = generate_curve(CurveKind::arc, a, 1 + seed % 25, seed);
      const DigitalObject general = generate_curve(CurveKind::general, a, 1 + seed % 60, seed);
      SCOPED_TRACE(seed);
      for (const DigitalObject* d : {&closed, &arc, &general}) {
        EXPECT_TRUE(is_general_curve(*d, a));
        EXPECT_EQ(count_blocks(*d), 0);
        EXPECT_TRUE(find_check(curve_report(*d, a), "t = v - 2(p + 1 - h)")->holds);
      }
      const CurveVerdict cv = curve_report(closed, a);
      EXPECT_TRUE(cv.is_simple_closed);
      EXPECT_FALSE(cv.is_simple_arc);
      EXPECT_TRUE(cv.all_identities_hold());
      EXPECT_TRUE(is_simple_arc(arc, a));
    }
  }
}

// Random small sets: curves never contain a block and the predicates nest.
TEST(CurveProperties, PredicatesNest) {
  std::mt19937_64 rng(31);
  for (int run = 0; run < 400; ++run) {
    std::vector<PixelCoord> px;
    for (int k = 0; k < 8; ++k) px.push_back({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    const DigitalObject d(std::move(px));
    for (const Adjacency a : {Adjacency::zero, Adjacency::one}) {
      const CurveVerdict v = curve_report(d, a);
      if (v.is_simple_closed || v.is_simple_arc) EXPECT_TRUE(v.is_general_curve);
      if (d.size() >= 3) EXPECT_FALSE(v.is_simple_closed && v.is_simple_arc);
      if (v.is_general_curve) EXPECT_EQ(count_blocks(d), 0);
    }
  }
}

}  // namespace
}  // namespace pixtopo
