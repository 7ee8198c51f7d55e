#include <gtest/gtest.h>

#include <random>

#include "pixtopo/curves.hpp"
#include "pixtopo/generate.hpp"
#include "pixtopo/invariants.hpp"

namespace pixtopo {
namespace {

TEST(GenerateRandom, ZeroDensityIsEmpty) {
  for (std::uint64_t seed : {0u, 1u, 99u}) EXPECT_TRUE(generate_random(4, 4, 0.0, seed).empty());
}

TEST(GenerateRandom, FullDensityIsTheFullSquare) {
  const DigitalObject d = generate_random(4, 4, 1.0, 17);
  EXPECT_EQ(count_pixels(d), 16);
  EXPECT_EQ(count_blocks(d), 9);
}

TEST(GenerateRandom, SameSeedSameObject) {
  EXPECT_EQ(generate_random(20, 20, 0.5, 42), generate_random(20, 20, 0.5, 42));
  EXPECT_NE(generate_random(20, 20, 0.5, 42), generate_random(20, 20, 0.5, 43));
}

// The first draws of mt19937_64 with its default seed are fixed by the
// standard, so this pins the cell order and threshold rule.
TEST(GenerateRandom, DocumentedDrawOrder) {
  std::mt19937_64 reference(5489u);
  std::vector<PixelCoord> expected;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 5; ++x)
      if (static_cast<double>(reference() >> 11) * 0x1.0p-53 < 0.5) expected.push_back({x, y});
  EXPECT_EQ(generate_random(5, 3, 0.5, 5489u), DigitalObject(expected));
}

TEST(GenerateRandom, RejectsBadArguments) {
  EXPECT_THROW(generate_random(4000, 4000, 0.5, 1), SizeError);
  EXPECT_THROW(generate_random(10, 10, 0.5, 1, 99), SizeError);
  EXPECT_NO_THROW(generate_random(10, 10, 0.5, 1, 100));
  EXPECT_THROW(generate_random(0, 4, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(generate_random(4, 4, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(generate_random(4, 4, -0.1, 1), std::invalid_argument);
}

TEST(GenerateCurve, MinimalClosedZeroCurveIsTheDiamond) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(generate_curve(CurveKind::closed, Adjacency::zero, 1, seed),
              (DigitalObject{{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
  }
}

TEST(GenerateCurve, MinimalClosedOneCurveIsTheRing) {
  const DigitalObject d = generate_curve(CurveKind::closed, Adjacency::one, 1, 3);
  EXPECT_EQ(d, (DigitalObject{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}));
  const InvariantReport r = analyze(d);
  EXPECT_EQ(r.v, 2 * r.p);
  EXPECT_EQ(r.v, 16);
}

TEST(GenerateCurve, FivePixelOneArc) {
  int tunnel_free = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DigitalObject d = generate_curve(CurveKind::arc, Adjacency::one, 5, seed);
    EXPECT_EQ(d.size(), 5u);
    EXPECT_TRUE(is_simple_arc(d, Adjacency::one));
    const InvariantReport r = analyze(d);
    if (r.t_direct == 0) {
      ++tunnel_free;
      EXPECT_EQ(r.v, 12);
    }
  }
  EXPECT_GT(tunnel_free, 0);
}

TEST(GenerateCurve, DeterministicPerSeed) {
  for (const CurveKind kind : {CurveKind::closed, CurveKind::arc, CurveKind::general}) {
    EXPECT_EQ(generate_curve(kind, Adjacency::zero, 9, 11), generate_curve(kind, Adjacency::zero, 9, 11));
    EXPECT_EQ(generate_curve(kind, Adjacency::one, 9, 11), generate_curve(kind, Adjacency::one, 9, 11));
  }
}

TEST(GenerateCurve, LargerFixturesPassTheirPredicates) {
  for (const Adjacency a : {Adjacency::zero, Adjacency::one}) {
    EXPECT_TRUE(is_simple_closed_curve(generate_curve(CurveKind::closed, a, 40, 5), a));
    EXPECT_TRUE(is_simple_arc(generate_curve(CurveKind::arc, a, 200, 5), a));
    EXPECT_TRUE(is_general_curve(generate_curve(CurveKind::general, a, 500, 5), a));
  }
}

TEST(GenerateCurve, StepBounds) {
  EXPECT_THROW(generate_curve(CurveKind::arc, Adjacency::one, 0, 1), std::invalid_argument);
  EXPECT_THROW(generate_curve(CurveKind::arc, Adjacency::one, kMaxCurveSteps + 1, 1),
               std::invalid_argument);
}

}  // namespace
}  // namespace pixtopo
