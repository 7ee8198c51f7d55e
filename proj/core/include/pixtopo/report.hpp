#pragma once

#include <string>
#include <vector>

#include "pixtopo/curves.hpp"
#include "pixtopo/invariants.hpp"

namespace pixtopo {

inline constexpr const char* kReportFormatVersion = "1";

struct ReportDocument {
  std::string source;
  InvariantReport report;
  std::vector<CurveVerdict> curves;  // at most one per adjacency
  std::string format_version = kReportFormatVersion;
};

enum class ReportFormat { json, text };

// JSON is a single line with keys in a fixed order:
//   p, v, c0, c1, h, b, t_direct, t_formula, consistent, source,
//   format_version[, curve]
// where curve maps "0"/"1" to the verdict for that adjacency. c1 is null when
// unknown. Text is an aligned table terminated by a newline.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

}  // namespace pixtopo
