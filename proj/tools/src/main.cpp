#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace pixtopo;
using namespace pixtopo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants of 2D digital objects"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pixtopo 0.1.0");

  const std::map<std::string, InputFormat> formats{
      {"ascii", InputFormat::ascii}, {"pbm", InputFormat::pbm}, {"auto", InputFormat::automatic}};
  const std::map<std::string, int> adjacencies{{"0", 0}, {"1", 1}};

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Report p, v, c, h, b, t for each input file");
  analyze->add_option("files", analyze_opt.files, "ASCII grid or PBM files, - for stdin")->required();
  analyze->add_option("--format", analyze_opt.format, "Input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  analyze->add_flag("--json", analyze_opt.json, "One JSON object per line");
  analyze->add_option("--curve", analyze_opt.curve_adjacencies, "Also classify as a curve under adjacency 0 or 1")
      ->transform(CLI::CheckedTransformer(adjacencies))
      ->expected(1);
  analyze->add_flag("--dump-grid", analyze_opt.dump_grid, "Print the parsed object as an ASCII grid instead");

  VerifyOptions verify_opt;
  std::string grid = "20x20", exhaustive;
  auto* verify = app.add_subcommand("verify", "Check the tunnel formula and the incremental tracker");
  verify->add_option("--grid", grid, "Random grid size WxH")->capture_default_str();
  verify->add_option("--density", verify_opt.density, "Pixel density (default: cycle 0.1 to 0.9)")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--seed", verify_opt.seed, "First seed")->capture_default_str();
  verify->add_option("--runs", verify_opt.runs, "Number of random objects")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--exhaustive", exhaustive, "Also check every subset of a WxH grid (at most 24 cells)");

  ClassifyOptions classify_opt;
  auto* classify = app.add_subcommand("classify", "Curve predicates and identities for one file");
  classify->add_option("file", classify_opt.file, "ASCII grid or PBM file, - for stdin")->required();
  classify->add_option("--adjacency", classify_opt.adjacency, "0 (8-neighbor) or 1 (4-neighbor)")
      ->transform(CLI::CheckedTransformer(adjacencies))
      ->required();
  classify->add_option("--format", classify_opt.format, "Input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  classify->add_flag("--json", classify_opt.json, "JSON output");

  GenOptions gen_opt;
  const std::map<std::string, CurveKind> kinds{
      {"closed", CurveKind::closed}, {"arc", CurveKind::arc}, {"general", CurveKind::general}};
  const std::map<std::string, GridEncoding> encodings{
      {"ascii", GridEncoding::ascii}, {"p1", GridEncoding::p1}, {"p4", GridEncoding::p4}};
  CurveKind kind = CurveKind::closed;
  auto* gen = app.add_subcommand("gen", "Generate a random object or curve fixture");
  auto* width = gen->add_option("--width", gen_opt.width)->check(CLI::PositiveNumber);
  auto* height = gen->add_option("--height", gen_opt.height)->check(CLI::PositiveNumber);
  auto* density = gen->add_option("--density", gen_opt.density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_opt.seed);
  auto* curve = gen->add_option("--curve", kind, "closed, arc or general")
                    ->transform(CLI::CheckedTransformer(kinds));
  gen->add_option("--adjacency", gen_opt.adjacency)->transform(CLI::CheckedTransformer(adjacencies))->needs(curve);
  gen->add_option("--steps", gen_opt.steps)->needs(curve);
  gen->add_option("-o,--output", gen_opt.output, "Output file (default stdout)");
  gen->add_option("--as", gen_opt.encoding, "ascii, p1 or p4")->transform(CLI::CheckedTransformer(encodings));
  curve->excludes(width)->excludes(height)->excludes(density);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  if (*analyze) return run_analyze(analyze_opt, std::cout, std::cerr);
  if (*verify) {
    const auto dims = parse_dimensions(grid);
    if (!dims) {
      std::cerr << "pixtopo: --grid expects WxH, got '" << grid << "'\n";
      return kUsageError;
    }
    std::tie(verify_opt.width, verify_opt.height) = *dims;
    if (!exhaustive.empty()) {
      verify_opt.exhaustive = parse_dimensions(exhaustive);
      if (!verify_opt.exhaustive || verify_opt.exhaustive->first * verify_opt.exhaustive->second > 24) {
        std::cerr << "pixtopo: --exhaustive expects WxH with at most 24 cells, got '" << exhaustive << "'\n";
        return kUsageError;
      }
    }
    try {
      return run_verify(verify_opt, std::cout, std::cerr);
    } catch (const std::exception& e) {  // size cap
      std::cerr << "pixtopo: " << e.what() << '\n';
      return kUsageError;
    }
  }
  if (*classify) return run_classify(classify_opt, std::cout, std::cerr);
  if (*gen) {
    if (curve->count() > 0) gen_opt.curve = kind;
    return run_gen(gen_opt, std::cout, std::cerr);
  }
  return kUsageError;
}
