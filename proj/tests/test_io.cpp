#include <gtest/gtest.h>

#include <random>

#include "pixtopo/io.hpp"

namespace pixtopo {
namespace {

const DigitalObject kDiamond{{1, 0}, {0, 1}, {2, 1}, {1, 2}};

TEST(ParseAsciiGrid, SinglePixel) { EXPECT_EQ(parse_ascii_grid("#"), (DigitalObject{{0, 0}})); }

TEST(ParseAsciiGrid, Diamond) { EXPECT_EQ(parse_ascii_grid(".#.\n#.#\n.#."), kDiamond); }

TEST(ParseAsciiGrid, AlternativeAlphabetAndRaggedLines) {
  EXPECT_EQ(parse_ascii_grid("010\r\n1 1\n 1\n"), kDiamond);
}

TEST(ParseAsciiGrid, RowsGrowDownward) {
  EXPECT_EQ(parse_ascii_grid("\n\n..#"), (DigitalObject{{2, 2}}));
}

TEST(ParseAsciiGrid, ReportsLineAndColumnOfBadCharacter) {
  try {
    parse_ascii_grid("#?");
    FAIL() << "expected a parse error";
  } catch (const GridParseError& e) {
    EXPECT_EQ(e.line, 1u);
    EXPECT_EQ(e.column, 2u);
    EXPECT_NE(std::string(e.what()).find("line 1, column 2"), std::string::npos);
  }
  try {
    parse_ascii_grid("..\n.#x");
    FAIL() << "expected a parse error";
  } catch (const GridParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.column, 3u);
  }
}

TEST(ParsePbm, PlainSinglePixel) { EXPECT_EQ(parse_pbm("P1\n1 1\n1\n"), (DigitalObject{{0, 0}})); }

TEST(ParsePbm, PlainDiamondWithComments) {
  EXPECT_EQ(parse_pbm("P1\n# a diamond\n3 # width\n3\n0 1 0\n1 0 1\n010\n"), kDiamond);
}

TEST(ParsePbm, RawDiamond) {
  const std::string bytes = std::string("P4\n3 3\n") + char(0x40) + char(0xA0) + char(0x40);
  EXPECT_EQ(parse_pbm(bytes), kDiamond);
}

TEST(ParsePbm, RawRowsArePaddedToBytes) {
  // 10 columns: two bytes per row, bits past column 9 are padding.
  const std::string bytes = std::string("P4 10 1\n") + char(0x80) + char(0x7F);
  EXPECT_EQ(parse_pbm(bytes), (DigitalObject{{0, 0}, {9, 0}}));
}

TEST(ParsePbm, TruncatedRawRaster) {
  const std::string bytes = std::string("P4\n3 3\n") + char(0x40);
  try {
    parse_pbm(bytes);
    FAIL() << "expected a parse error";
  } catch (const PbmParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unexpected end of raster"), std::string::npos);
  }
}

TEST(ParsePbm, TruncatedPlainRaster) {
  EXPECT_THROW(parse_pbm("P1\n2 2\n1 0 1"), PbmParseError);
}

TEST(ParsePbm, BadMagic) {
  try {
    parse_pbm("P2\n1 1\n1\n");
    FAIL() << "expected a parse error";
  } catch (const PbmParseError& e) {
    EXPECT_EQ(e.offset, 0u);
  }
  EXPECT_THROW(parse_pbm("P12 1 1\n1"), PbmParseError);
  EXPECT_THROW(parse_pbm(""), PbmParseError);
}

TEST(ParsePbm, NonNumericHeaderReportsOffset) {
  try {
    parse_pbm("P1\n3 x\n");
    FAIL() << "expected a parse error";
  } catch (const PbmParseError& e) {
    EXPECT_EQ(e.offset, 5u);
  }
}

TEST(ParsePbm, BadPlainRasterCharacter) { EXPECT_THROW(parse_pbm("P1 1 1 2"), PbmParseError); }

TEST(DetectFormat, MagicSelectsPbm) {
  EXPECT_EQ(detect_format("P1\n1 1\n1"), InputFormat::pbm);
  EXPECT_EQ(detect_format("P4 1 1\n"), InputFormat::pbm);
  EXPECT_EQ(detect_format("#.#"), InputFormat::ascii);
  EXPECT_EQ(parse_input(".#.\n#.#\n.#.", InputFormat::automatic), kDiamond);
}

DigitalObject random_grid(std::mt19937_64& rng) {
  const int w = 1 + static_cast<int>(rng() % 20);
  const int h = 1 + static_cast<int>(rng() % 12);
  std::vector<PixelCoord> px;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (rng() % 3 == 0) px.push_back({x, y});
  return DigitalObject(std::move(px));
}

// Writers and readers agree for all three encodings, and the ascii and pbm
// parsers agree on equivalent rasters.
TEST(RoundTrip, AllEncodingsAgree) {
  std::mt19937_64 rng(8);
  for (int run = 0; run < 200; ++run) {
    const DigitalObject d = random_grid(rng);
    const DigitalObject from_ascii = parse_ascii_grid(write_ascii_grid(d));
    EXPECT_EQ(from_ascii, d);
    EXPECT_EQ(parse_pbm(write_pbm_plain(d)), d);
    EXPECT_EQ(parse_pbm(write_pbm_raw(d)), d);
    EXPECT_EQ(write_ascii_grid(from_ascii), write_ascii_grid(d));
  }
}

TEST(Writers, NegativeCoordinatesShiftToOrigin) {
  const DigitalObject d{{-1, -1}, {0, 0}};
  EXPECT_EQ(write_ascii_grid(d), "#.\n.#\n");
  EXPECT_EQ(write_pbm_plain(d), "P1\n2 2\n1 0\n0 1\n");
}

TEST(Writers, EmptyObject) {
  EXPECT_EQ(write_ascii_grid(DigitalObject{}), "");
  EXPECT_EQ(parse_pbm(write_pbm_raw(DigitalObject{})), DigitalObject{});
}

}  // namespace
}  // namespace pixtopo
