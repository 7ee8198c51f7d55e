#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pixtopo/generate.hpp"
#include "pixtopo/io.hpp"

namespace pixtopo::cli {

enum ExitCode : int {
  kOk = 0,
  kInconsistent = 1,
  kInputError = 2,
  kUsageError = 3,
};

struct AnalyzeOptions {
  std::vector<std::string> files;
  InputFormat format = InputFormat::automatic;
  bool json = false;
  std::vector<int> curve_adjacencies;
  bool dump_grid = false;
};

struct VerifyOptions {
  int width = 20;
  int height = 20;
  std::optional<double> density;  // unset: cycle through 0.1 .. 0.9
  std::uint64_t seed = 1;
  int runs = 1000;
  std::optional<std::pair<int, int>> exhaustive;
};

struct ClassifyOptions {
  std::string file;
  int adjacency = 0;
  InputFormat format = InputFormat::automatic;
  bool json = false;
};

enum class GridEncoding { ascii, p1, p4 };

struct GenOptions {
  int width = 20;
  int height = 20;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::optional<CurveKind> curve;
  int adjacency = 0;
  int steps = 16;
  std::string output;  // empty: stdout
  GridEncoding encoding = GridEncoding::ascii;
};

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

// "WxH" with both sides positive.
std::optional<std::pair<int, int>> parse_dimensions(const std::string& text);

}  // namespace pixtopo::cli
