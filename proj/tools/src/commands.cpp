#include "commands.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "pixtopo/curves.hpp"
#include "pixtopo/incremental.hpp"
#include "pixtopo/invariants.hpp"
#include "pixtopo/report.hpp"

namespace pixtopo::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw InputError("read error");
  return bytes;
}

DigitalObject load(const std::string& path, InputFormat format) {
  const std::string bytes = read_input(path);
  return parse_input(bytes, format);
}

struct FileResult {
  std::string output;
  std::string error;
  bool consistent = true;
};

FileResult analyze_one(const std::string& path, const AnalyzeOptions& opt) {
  FileResult res;
  try {
    const DigitalObject d = load(path, opt.format);
    if (opt.dump_grid) {
      res.output = write_ascii_grid(d);
      return res;
    }
    ReportDocument doc{path, analyze(d), {}};
    for (const int a : opt.curve_adjacencies) doc.curves.push_back(curve_report(d, static_cast<Adjacency>(a)));
    res.consistent = doc.report.consistent;
    res.output = emit_report(doc, opt.json ? ReportFormat::json : ReportFormat::text);
    if (opt.json) res.output += '\n';
  } catch (const std::exception& e) {
    // ParseError, InputError, and the size guard of the raster all land here.
    res.error = e.what();
  }
  return res;
}

constexpr std::array<double, 5> kDensities = {0.1, 0.3, 0.5, 0.7, 0.9};

struct CaseTally {
  std::int64_t listed = 0;
  std::int64_t unlisted = 0;
};

}  // namespace

std::optional<std::pair<int, int>> parse_dimensions(const std::string& text) {
  int w = 0, h = 0;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> w >> sep >> h) || (sep != 'x' && sep != 'X') || w <= 0 || h <= 0) return std::nullopt;
  if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  return std::pair{w, h};
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  // Files are independent; run them in waves of hardware_concurrency and
  // print in argument order.
  const std::size_t wave = std::max(1u, std::thread::hardware_concurrency());
  bool any_error = false, any_inconsistent = false;
  for (std::size_t start = 0; start < opt.files.size(); start += wave) {
    std::vector<std::future<FileResult>> jobs;
    const std::size_t stop = std::min(opt.files.size(), start + wave);
    for (std::size_t i = start; i < stop; ++i)
      jobs.push_back(std::async(std::launch::async, analyze_one, std::cref(opt.files[i]), std::cref(opt)));
    for (std::size_t i = start; i < stop; ++i) {
      const FileResult r = jobs[i - start].get();
      if (!r.error.empty()) {
        err << "pixtopo: " << opt.files[i] << ": " << r.error << '\n';
        any_error = true;
        continue;
      }
      if (!opt.json && !opt.dump_grid && i > 0) out << '\n';
      out << r.output;
      if (!r.consistent) {
        err << "pixtopo: " << opt.files[i] << ": tunnel count disagrees with the formula\n";
        any_inconsistent = true;
      }
    }
  }
  out.flush();
  if (any_error) return kInputError;
  return any_inconsistent ? kInconsistent : kOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  std::int64_t inconsistent = 0, mismatched = 0, insertions = 0, unmatched = 0, forbidden = 0;
  std::array<CaseTally, kCaseCount> tally{};

  for (int run = 0; run < opt.runs; ++run) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(run);
    const double density = opt.density.value_or(kDensities[run % kDensities.size()]);
    const DigitalObject d = generate_random(opt.width, opt.height, density, seed);
    const InvariantReport full = analyze(d);
    if (!full.consistent) {
      if (inconsistent < 5) out << "inconsistent: seed " << seed << " density " << density << '\n';
      ++inconsistent;
    }

    std::vector<PixelCoord> order(d.begin(), d.end());
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    Tracker tracker;
    for (const PixelCoord p : order) {
      const InsertionDelta delta = tracker.add_pixel(p);
      const CaseId id = classify_case(delta);
      ++insertions;
      if (id == CaseId::unmatched) ++unmatched;
      if (violates_forbidden_transitions(delta)) ++forbidden;
      auto& slot = tally[static_cast<std::size_t>(id)];
      (is_listed_configuration(delta) ? slot.listed : slot.unlisted)++;
    }
    InvariantReport snap = tracker.snapshot();
    snap.c1 = full.c1;
    if (snap != full) {
      if (mismatched < 5) out << "incremental mismatch: seed " << seed << " density " << density << '\n';
      ++mismatched;
    }
  }

  out << "random objects: " << opt.runs << " on " << opt.width << 'x' << opt.height << ", density ";
  if (opt.density)
    out << *opt.density;
  else
    out << "0.1 to 0.9";
  out << ", seeds " << opt.seed << " and up\n";
  out << "  formula inconsistencies  " << inconsistent << '\n';
  out << "  incremental mismatches   " << mismatched << '\n';
  out << "  insertions               " << insertions << '\n';
  out << "  unmatched deltas         " << unmatched << '\n';
  out << "  forbidden transitions    " << forbidden << '\n';

  if (opt.exhaustive) {
    const auto [w, h] = *opt.exhaustive;
    const int n = w * h;
    std::int64_t bad = 0;
    std::vector<PixelCoord> px;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      px.clear();
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1) px.push_back({k % w, k / w});
      if (!analyze(DigitalObject(px)).consistent) ++bad;
    }
    out << "exhaustive " << w << 'x' << h << ": " << (std::uint64_t{1} << n) << " subsets, "
        << bad << " inconsistencies\n";
    inconsistent += bad;
  }

  out << "\ncase      listed  unlisted\n";
  for (std::size_t i = 0; i < kCaseCount; ++i) {
    const CaseTally& t = tally[i];
    out << "  " << std::left << std::setw(10) << to_string(static_cast<CaseId>(i)) << std::right
        << std::setw(6) << t.listed << std::setw(10) << t.unlisted << '\n';
  }

  const bool ok = inconsistent == 0 && mismatched == 0 && unmatched == 0 && forbidden == 0;
  out << "\nresult: " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kInconsistent;
}

int run_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  DigitalObject d;
  try {
    d = load(opt.file, opt.format);
  } catch (const std::exception& e) {
    err << "pixtopo: " << opt.file << ": " << e.what() << '\n';
    return kInputError;
  }
  const ReportDocument doc{opt.file, analyze(d), {curve_report(d, static_cast<Adjacency>(opt.adjacency))}};
  out << emit_report(doc, opt.json ? ReportFormat::json : ReportFormat::text);
  if (opt.json) out << '\n';
  return doc.report.consistent ? kOk : kInconsistent;
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  DigitalObject d;
  try {
    d = opt.curve ? generate_curve(*opt.curve, static_cast<Adjacency>(opt.adjacency), opt.steps, opt.seed)
                  : generate_random(opt.width, opt.height, opt.density, opt.seed);
  } catch (const GenerationError& e) {
    err << "pixtopo: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {  // size cap and argument checks
    err << "pixtopo: " << e.what() << '\n';
    return kUsageError;
  }

  std::string bytes;
  switch (opt.encoding) {
    case GridEncoding::ascii: bytes = write_ascii_grid(d); break;
    case GridEncoding::p1: bytes = write_pbm_plain(d); break;
    case GridEncoding::p4: bytes = write_pbm_raw(d); break;
  }
  if (opt.output.empty() || opt.output == "-") {
    out << bytes;
    out.flush();
    return kOk;
  }
  std::ofstream file(opt.output, std::ios::binary);
  file << bytes;
  file.close();
  if (!file) {
    err << "pixtopo: " << opt.output << ": cannot write file\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace pixtopo::cli
