#include "rmtlab/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

namespace rmtlab::ingest {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

SpectrumFile parse_levels(std::string_view text, std::string source_label) {
  SpectrumFile out;
  out.source_label = std::move(source_label);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw_line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    double value = 0.0;
    if (!parse_double(line, value)) {
      throw IngestError(out.source_label + ":" + std::to_string(line_no) +
                        ": not a finite decimal number: '" + std::string(line) + "'");
    }
    out.levels.push_back(value);
  }
  if (out.levels.empty()) {
    throw IngestError(out.source_label + ": no levels found");
  }
  if (!std::is_sorted(out.levels.begin(), out.levels.end())) {
    std::sort(out.levels.begin(), out.levels.end());
    out.warnings.push_back("levels were not in increasing order; sorted");
  }
  const auto unique_end = std::unique(out.levels.begin(), out.levels.end());
  if (unique_end != out.levels.end()) {
    const auto dropped = std::distance(unique_end, out.levels.end());
    out.levels.erase(unique_end, out.levels.end());
    out.warnings.push_back("dropped " + std::to_string(dropped) + " duplicate level(s)");
  }
  if (out.levels.size() < 3) {
    throw IngestError(out.source_label + ": need at least 3 distinct levels, got " +
                      std::to_string(out.levels.size()));
  }
  return out;
}

SpectrumFile read_levels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError("cannot open spectrum file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_levels(buffer.str(), path.string());
}

std::string serialize_levels(const SpectrumFile& spectrum) {
  std::string out;
  char buf[64];
  for (double level : spectrum.levels) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, level);
    out.append(buf, ptr);
    out.push_back('\n');
  }
  return out;
}

UnfoldMethod parse_unfold_method(std::string_view text) {
  if (text == "global") return GlobalMean{};
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon);
    int value = 0;
    if (!parse_int(text.substr(colon + 1), value)) {
      throw IngestError("unfold: bad parameter in '" + std::string(text) + "'");
    }
    if (head == "local") {
      if (value < 1 || value % 2 == 0) {
        throw IngestError("unfold: local window must be an odd positive integer");
      }
      return LocalWindow{value};
    }
    if (head == "poly") {
      if (value < 1 || value > 9) {
        throw IngestError("unfold: polynomial degree must be in [1, 9]");
      }
      return PolynomialStaircase{value};
    }
  }
  throw IngestError("unfold: expected global, local:<w> or poly:<p>, got '" +
                    std::string(text) + "'");
}

std::string describe(const UnfoldMethod& method) {
  struct Visitor {
    std::string operator()(const GlobalMean&) const { return "global"; }
    std::string operator()(const LocalWindow& m) const {
      return "local:" + std::to_string(m.width);
    }
    std::string operator()(const PolynomialStaircase& m) const {
      return "poly:" + std::to_string(m.degree);
    }
  };
  return std::visit(Visitor{}, method);
}

namespace {

std::vector<double> differences(const std::vector<double>& v) {
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out[i] = v[i + 1] - v[i];
  return out;
}

std::vector<double> local_window(const std::vector<double>& spacings, int width) {
  const auto m = static_cast<std::ptrdiff_t>(spacings.size());
  if (width >= m) {
    throw IngestError("unfold: local window " + std::to_string(width) +
                      " must be smaller than the number of spacings (" + std::to_string(m) + ")");
  }
  // Prefix sums give each window mean in O(1).
  std::vector<double> prefix(spacings.size() + 1, 0.0);
  for (std::size_t i = 0; i < spacings.size(); ++i) prefix[i + 1] = prefix[i] + spacings[i];
  const std::ptrdiff_t half = width / 2;
  std::vector<double> out(spacings.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(m, i + half + 1);
    const double mean = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
    out[i] = spacings[i] / mean;
  }
  return out;
}

std::vector<double> polynomial_staircase(const std::vector<double>& levels, int degree) {
  const auto n = static_cast<Eigen::Index>(levels.size());
  const double lo = levels.front();
  const double hi = levels.back();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Eigen::MatrixXd design(n, degree + 1);
  Eigen::VectorXd counts(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = (levels[i] - centre) / half;
    double power = 1.0;
    for (int j = 0; j <= degree; ++j) {
      design(i, j) = power;
      power *= u;
    }
    counts(i) = static_cast<double>(i + 1);
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (n <= degree || qr.rank() < degree + 1) {
    throw IngestError("unfold: degenerate staircase fit (rank " + std::to_string(qr.rank()) +
                      " < " + std::to_string(degree + 1) + ")");
  }
  const Eigen::VectorXd fitted = design * qr.solve(counts);
  std::vector<double> out(levels.size() - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    out[i] = fitted(i + 1) - fitted(i);
    if (out[i] < 0.0) {
      throw IngestError("unfold: fitted staircase decreases between levels " +
                        std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                        "; try a lower degree");
    }
  }
  return out;
}

}  // namespace

stats::SpacingSample unfold(const SpectrumFile& spectrum, const UnfoldMethod& method) {
  if (spectrum.levels.size() < 3) {
    throw IngestError("unfold: need at least 3 levels");
  }
  std::vector<double> unfolded;
  if (std::holds_alternative<GlobalMean>(method)) {
    unfolded = differences(spectrum.levels);
  } else if (const auto* local = std::get_if<LocalWindow>(&method)) {
    unfolded = local_window(differences(spectrum.levels), local->width);
  } else {
    unfolded = polynomial_staircase(spectrum.levels, std::get<PolynomialStaircase>(method).degree);
  }
  return stats::normalize(std::move(unfolded));
}

}  // namespace rmtlab::ingest
