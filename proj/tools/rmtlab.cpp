// rmtlab: sample random-matrix ensembles, tabulate the analytic spacing
// curves, and compare spacing samples or external spectra against them.
//
// Exit codes: 0 success, 1 runtime or check failure, 2 usage error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rmtlab/curves.hpp"
#include "rmtlab/ensembles.hpp"
#include "rmtlab/ingest.hpp"
#include "rmtlab/report.hpp"
#include "rmtlab/sampling.hpp"
#include "rmtlab/stats.hpp"
#include "rmtlab/verify.hpp"

namespace {

using namespace rmtlab;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path);
  }
  return out;
}

std::vector<curves::CurveKind> parse_curve_list(const std::string& text) {
  if (text == "all") {
    return {curves::kAllCurves.begin(), curves::kAllCurves.end()};
  }
  std::vector<curves::CurveKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto k = curves::parse_curve(item);
    if (!k) {
      throw UsageError("unknown curve '" + item + "' (expected goe, gue, gse, gpoe, gpue or all)");
    }
    out.push_back(*k);
  }
  if (out.empty()) {
    throw UsageError("--against needs at least one curve");
  }
  return out;
}

// First column of a spacing CSV; a non-numeric first row is a header.
std::vector<double> read_spacing_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open spacing file " + path);
  }
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string field = line.substr(0, line.find(','));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    const bool numeric = ec == std::errc() && ptr == field.data() + field.size();
    if (!numeric) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": not a number: '" +
                               field + "'");
    }
    first_row = false;
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::runtime_error(path + ": no spacings found");
  }
  return values;
}

void emit(const report::RunReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << report::to_json(rep).dump(2) << '\n';
  } else {
    std::cout << report::to_text(rep);
  }
}

struct SampleArgs {
  std::string ensemble;
  std::optional<double> kappa;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double sigma = 1.0;
  int workers = 1;
  std::string out;
};

int run_sample(const SampleArgs& args) {
  const auto family = ensembles::EnsembleKind::parse_family(args.ensemble);
  if (!family) {
    throw UsageError("unknown ensemble '" + args.ensemble + "'");
  }
  const bool quasi = *family == ensembles::Family::QH3 || *family == ensembles::Family::QH4;
  if (args.kappa && !quasi) {
    throw UsageError("--kappa applies only to qh3 and qh4");
  }
  if (quasi && !args.kappa) {
    std::cout << "notice: --kappa not given; using kappa = 0\n";
  }
  if (args.n < 1) throw UsageError("--n must be >= 1");
  if (!(args.sigma > 0.0)) throw UsageError("--sigma must be positive");
  if (args.workers < 1) throw UsageError("--workers must be >= 1");
  ensembles::EnsembleKind kind = [&] {
    try {
      return ensembles::EnsembleKind::of(*family, quasi ? std::optional(args.kappa.value_or(0.0))
                                                        : std::nullopt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  const auto result =
      sampling::sample_spacings(kind, args.n, {args.sigma, args.seed, args.workers});
  auto out = open_output(args.out);
  out << "raw_spacing,normalized_spacing\n";
  for (std::size_t i = 0; i < result.sample.size(); ++i) {
    out << report::format_number(result.sample.raw[i]) << ','
        << report::format_number(result.sample.normalized[i]) << '\n';
  }
  if (!out.flush()) throw std::runtime_error("failed writing " + args.out);
  std::cout << "ensemble: " << kind.name() << '\n';
  std::cout << "accepted: " << result.sample.size() << " of " << result.draws << " draws\n";
  std::cout << "acceptance-rate: " << report::format_number(result.acceptance_rate) << '\n';
  return 0;
}

struct CurveArgs {
  std::string curve;
  double xmax = 0.0;
  int points = 0;
  std::string out;
};

int run_curve(const CurveArgs& args) {
  const auto kind = curves::parse_curve(args.curve);
  if (!kind) throw UsageError("unknown curve '" + args.curve + "'");
  if (!(args.xmax > 0.0)) throw UsageError("--xmax must be positive");
  if (args.points < 2) throw UsageError("--points must be >= 2");
  auto out = open_output(args.out);
  out << "x,pdf,cdf\n";
  for (int i = 0; i < args.points; ++i) {
    const double x = i + 1 == args.points ? args.xmax : args.xmax * i / (args.points - 1);
    out << report::format_number(x) << ',' << report::format_number(curves::pdf(*kind, x)) << ','
        << report::format_number(curves::cdf(*kind, x)) << '\n';
  }
  if (!out.flush()) throw std::runtime_error("failed writing " + args.out);
  return 0;
}

void check_report_format(const std::string& format) {
  if (format != "json" && format != "text") {
    throw UsageError("--report must be json or text");
  }
}

struct CompareArgs {
  std::string spacings;
  std::string against = "all";
  std::string format = "json";
  std::optional<std::string> timestamp;
};

int run_compare(const CompareArgs& args) {
  check_report_format(args.format);
  const auto curve_list = parse_curve_list(args.against);
  const auto sample = stats::normalize(read_spacing_column(args.spacings));
  auto rep = report::compare(args.spacings, sample, curve_list);
  const auto [lo, hi] = std::minmax_element(sample.normalized.begin(), sample.normalized.end());
  if (*lo == *hi) {
    rep.warnings.push_back("all spacings equal: zero variance after normalization");
    std::cerr << "warning: all spacings equal: zero variance after normalization\n";
  }
  rep.timestamp = args.timestamp.value_or(report::utc_timestamp());
  emit(rep, args.format);
  return 0;
}

struct AnalyzeArgs {
  std::string spectrum;
  std::string unfold = "local:51";
  std::string format = "json";
  std::optional<std::string> timestamp;
};

int run_analyze(const AnalyzeArgs& args) {
  check_report_format(args.format);
  ingest::UnfoldMethod method;
  try {
    method = ingest::parse_unfold_method(args.unfold);
  } catch (const ingest::IngestError& e) {
    throw UsageError(e.what());
  }
  const auto spectrum = ingest::read_levels(args.spectrum);
  for (const auto& w : spectrum.warnings) std::cerr << "warning: " << w << '\n';
  const auto sample = ingest::unfold(spectrum, method);
  auto rep = report::compare(spectrum.source_label, sample, curves::kAllCurves);
  rep.unfold = ingest::describe(method);
  rep.warnings = spectrum.warnings;
  rep.timestamp = args.timestamp.value_or(report::utc_timestamp());
  emit(rep, args.format);
  return 0;
}

int run_verify(std::size_t mc_samples) {
  const auto checks = verify::run_checks({mc_samples, 42});
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  bool all_pass = true;
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(8)
            << "result" << "value / tolerance\n";
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    std::cout << std::setw(static_cast<int>(width) + 2) << c.name << std::setw(8)
              << (c.pass ? "PASS" : "FAIL") << report::format_number(c.value) << "  ("
              << c.tolerance << ")\n";
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
  std::cout << passed << "/" << checks.size() << " checks passed\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rmtlab: level-spacing statistics of Gaussian (pseudo-)Hermitian ensembles"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Monte Carlo spacings of an ensemble to CSV");
  sample->add_option("--ensemble", sample_args.ensemble, "goe|gue|gse|gpoe|gpue|qh3|qh4")->required();
  sample->add_option("--kappa", sample_args.kappa, "metric parameter for qh3/qh4 (eps = exp(-kappa))");
  sample->add_option("--n", sample_args.n, "number of accepted spacings")->required();
  sample->add_option("--seed", sample_args.seed, "64-bit seed")->required();
  sample->add_option("--sigma", sample_args.sigma, "Gaussian scale")->capture_default_str();
  sample->add_option("--workers", sample_args.workers, "OpenMP threads")->capture_default_str();
  sample->add_option("--out", sample_args.out, "output CSV path")->required();

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Tabulate an analytic curve (x, pdf, cdf) to CSV");
  curve->add_option("--curve", curve_args.curve, "goe|gue|gse|gpoe|gpue")->required();
  curve->add_option("--xmax", curve_args.xmax, "grid end")->required();
  curve->add_option("--points", curve_args.points, "grid points including endpoints")->required();
  curve->add_option("--out", curve_args.out, "output CSV path")->required();

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "KS-compare a spacing CSV against curves");
  compare->add_option("--spacings", compare_args.spacings, "CSV; first column is used")->required();
  compare->add_option("--against", compare_args.against, "comma list of curves, or all")
      ->capture_default_str();
  compare->add_option("--report", compare_args.format, "json|text")->capture_default_str();
  compare->add_option("--timestamp", compare_args.timestamp, "fixed report timestamp");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Unfold a level file and compare against all curves");
  analyze->add_option("--spectrum", analyze_args.spectrum, "one level per line")->required();
  analyze->add_option("--unfold", analyze_args.unfold, "global|local:<w>|poly:<p>")
      ->capture_default_str();
  analyze->add_option("--report", analyze_args.format, "json|text")->capture_default_str();
  analyze->add_option("--timestamp", analyze_args.timestamp, "fixed report timestamp");

  std::size_t mc_samples = 20000;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in self-check suite");
  verify_cmd->add_option("--mc-samples", mc_samples, "spacings per Monte Carlo check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample) return run_sample(sample_args);
    if (*curve) return run_curve(curve_args);
    if (*compare) return run_compare(compare_args);
    if (*analyze) return run_analyze(analyze_args);
    if (*verify_cmd) return run_verify(mc_samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
