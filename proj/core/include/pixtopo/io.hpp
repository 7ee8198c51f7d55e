#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pixtopo/grid.hpp"

namespace pixtopo {

// Both formats share one convention: column 0 is leftmost, row 0 is the top
// line and y grows downward.

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Position is 1-based.
class GridParseError : public ParseError {
 public:
  GridParseError(std::size_t line, std::size_t column, char found);
  std::size_t line;
  std::size_t column;
};

// Offset is 0-based into the input bytes.
class PbmParseError : public ParseError {
 public:
  PbmParseError(std::size_t offset, const std::string& what);
  std::size_t offset;
};

enum class InputFormat { ascii, pbm, automatic };

// '#' and '1' mark pixels; '.', '0' and ' ' are empty. Lines may differ in
// length. A trailing '\r' on a line is ignored.
DigitalObject parse_ascii_grid(std::string_view text);

// Netpbm P1 (plain) or P4 (raw) bitmap; bit 1 is a pixel.
DigitalObject parse_pbm(std::string_view bytes);

// P1/P4 magic selects pbm, anything else is an ascii grid.
InputFormat detect_format(std::string_view bytes);

DigitalObject parse_input(std::string_view bytes, InputFormat format);

// Raster writers cover columns min(0, min x)..max x and rows
// min(0, min y)..max y, so objects with non-negative coordinates read back
// unchanged.
std::string write_ascii_grid(const DigitalObject& d);
std::string write_pbm_plain(const DigitalObject& d);
std::string write_pbm_raw(const DigitalObject& d);

}  // namespace pixtopo
