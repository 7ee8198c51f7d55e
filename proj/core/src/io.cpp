#include "pixtopo/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

namespace pixtopo {

namespace {

bool is_pbm_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class PbmReader {
 public:
  explicit PbmReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  char take() { return bytes_[pos_++]; }
  std::string_view rest() const { return bytes_.substr(pos_); }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_pbm_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::int32_t header_int(const char* field) {
    skip_space_and_comments();
    if (at_end()) throw PbmParseError(pos_, std::string("unexpected end of header reading ") + field);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw PbmParseError(pos_, std::string("expected decimal ") + field);
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > std::numeric_limits<std::int32_t>::max())
        throw PbmParseError(start, std::string(field) + " out of range");
    }
    return static_cast<std::int32_t>(value);
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

struct Region {
  std::int32_t x0 = 0, y0 = 0;
  std::int64_t width = 0, height = 0;
};

Region raster_region(const DigitalObject& d) {
  Region r;
  const auto box = bounding_box(d);
  if (!box) return r;
  r.x0 = std::min(0, box->min.x);
  r.y0 = std::min(0, box->min.y);
  r.width = std::int64_t{box->max.x} - r.x0 + 1;
  r.height = std::int64_t{box->max.y} - r.y0 + 1;
  return r;
}

}  // namespace

GridParseError::GridParseError(std::size_t line_no, std::size_t column_no, char found)
    : ParseError("invalid character '" + std::string(1, found) + "' at line " +
                 std::to_string(line_no) + ", column " + std::to_string(column_no)),
      line(line_no),
      column(column_no) {}

PbmParseError::PbmParseError(std::size_t at, const std::string& what)
    : ParseError(what + " (byte offset " + std::to_string(at) + ")"), offset(at) {}

DigitalObject parse_ascii_grid(std::string_view text) {
  std::vector<PixelCoord> pixels;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    for (std::size_t col = 0; col < row.size(); ++col) {
      switch (row[col]) {
        case '#':
        case '1':
          pixels.push_back({static_cast<std::int32_t>(col), static_cast<std::int32_t>(line)});
          break;
        case '.':
        case '0':
        case ' ':
          break;
        default:
          throw GridParseError(line + 1, col + 1, row[col]);
      }
    }
    ++line;
    start = end + 1;
  }
  return DigitalObject(std::move(pixels));
}

DigitalObject parse_pbm(std::string_view bytes) {
  PbmReader in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
    throw PbmParseError(0, "bad magic number, expected P1 or P4");
  const bool raw = bytes[1] == '4';
  in.take();
  in.take();
  if (!in.at_end() && !is_pbm_space(in.peek()) && in.peek() != '#')
    throw PbmParseError(in.offset(), "bad magic number, expected P1 or P4");

  const std::int32_t width = in.header_int("width");
  const std::int32_t height = in.header_int("height");

  std::vector<PixelCoord> pixels;
  if (raw) {
    if (in.at_end() || !is_pbm_space(in.peek()))
      throw PbmParseError(in.offset(), "expected single whitespace before raster");
    in.take();
    const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    const std::string_view raster = in.rest();
    if (row_bytes != 0 && raster.size() / row_bytes < static_cast<std::size_t>(height))
      throw PbmParseError(bytes.size(), "unexpected end of raster");
    for (std::int32_t y = 0; y < height; ++y) {
      for (std::int32_t x = 0; x < width; ++x) {
        const auto byte = static_cast<unsigned char>(
            raster[static_cast<std::size_t>(y) * row_bytes + static_cast<std::size_t>(x / 8)]);
        if (byte & (0x80u >> (x % 8))) pixels.push_back({x, y});
      }
    }
  } else {
    const std::int64_t cells = std::int64_t{width} * height;
    for (std::int64_t k = 0; k < cells; ++k) {
      in.skip_space_and_comments();
      if (in.at_end()) throw PbmParseError(in.offset(), "unexpected end of raster");
      const char c = in.peek();
      if (c != '0' && c != '1')
        throw PbmParseError(in.offset(), std::string("invalid raster character '") + c + "'");
      in.take();
      if (c == '1')
        pixels.push_back({static_cast<std::int32_t>(k % width), static_cast<std::int32_t>(k / width)});
    }
  }
  return DigitalObject(std::move(pixels));
}

InputFormat detect_format(std::string_view bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '1' || bytes[1] == '4'))
    return InputFormat::pbm;
  return InputFormat::ascii;
}

DigitalObject parse_input(std::string_view bytes, InputFormat format) {
  if (format == InputFormat::automatic) format = detect_format(bytes);
  return format == InputFormat::pbm ? parse_pbm(bytes) : parse_ascii_grid(bytes);
}

std::string write_ascii_grid(const DigitalObject& d) {
  const Region r = raster_region(d);
  std::string out;
  for (std::int64_t row = 0; row < r.height; ++row) {
    std::string line(static_cast<std::size_t>(r.width), '.');
    for (std::int64_t col = 0; col < r.width; ++col) {
      if (d.contains({static_cast<std::int32_t>(r.x0 + col), static_cast<std::int32_t>(r.y0 + row)}))
        line[static_cast<std::size_t>(col)] = '#';
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string write_pbm_plain(const DigitalObject& d) {
  const Region r = raster_region(d);
  std::string out = "P1\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n";
  for (std::int64_t row = 0; row < r.height; ++row) {
    for (std::int64_t col = 0; col < r.width; ++col) {
      // Plain PBM lines should stay under 70 characters.
      if (col > 0) out += (col % 32 == 0) ? '\n' : ' ';
      out += d.contains({static_cast<std::int32_t>(r.x0 + col), static_cast<std::int32_t>(r.y0 + row)})
                 ? '1'
                 : '0';
    }
    out += '\n';
  }
  return out;
}

std::string write_pbm_raw(const DigitalObject& d) {
  const Region r = raster_region(d);
  std::string out = "P4\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n";
  const std::size_t row_bytes = static_cast<std::size_t>((r.width + 7) / 8);
  for (std::int64_t row = 0; row < r.height; ++row) {
    std::string bits(row_bytes, '\0');
    for (std::int64_t col = 0; col < r.width; ++col) {
      if (d.contains({static_cast<std::int32_t>(r.x0 + col), static_cast<std::int32_t>(r.y0 + row)}))
        bits[static_cast<std::size_t>(col / 8)] |= static_cast<char>(0x80u >> (col % 8));
    }
    out += bits;
  }
  return out;
}

}  // namespace pixtopo
