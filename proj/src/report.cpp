#include "rmtlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace rmtlab::report {

curves::CurveKind best_fit(std::span<const KsEntry> entries) {
  if (entries.empty()) {
    throw std::invalid_argument("best_fit: no KS results");
  }
  const auto rank = [](curves::CurveKind k) { return static_cast<int>(k); };
  const KsEntry* best = &entries.front();
  for (const KsEntry& e : entries) {
    if (e.d < best->d || (e.d == best->d && rank(e.curve) < rank(best->curve))) {
      best = &e;
    }
  }
  return best->curve;
}

RunReport compare(std::string label, const stats::SpacingSample& sample,
                  std::span<const curves::CurveKind> against) {
  RunReport r;
  r.ensemble_or_source = std::move(label);
  r.n = sample.size();
  for (curves::CurveKind k : curves::kAllCurves) {
    if (std::find(against.begin(), against.end(), k) == against.end()) continue;
    const stats::KsResult ks = stats::ks_test(sample, k);
    r.ks_results.push_back({k, ks.d, ks.p_value});
  }
  r.best_fit = best_fit(r.ks_results);
  return r;
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["ensemble-or-source"] = report.ensemble_or_source;
  j["n"] = report.n;
  j["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json();
  j["acceptance-rate"] = report.acceptance_rate ? nlohmann::ordered_json(*report.acceptance_rate)
                                                : nlohmann::ordered_json();
  nlohmann::ordered_json ks = nlohmann::ordered_json::object();
  for (const KsEntry& e : report.ks_results) {
    ks[std::string(curves::curve_name(e.curve))] = {{"d", e.d}, {"p", e.p}};
  }
  j["ks-results"] = ks;
  j["best-fit"] = std::string(curves::curve_name(report.best_fit));
  j["timestamp"] = report.timestamp;
  if (report.unfold) j["unfold"] = *report.unfold;
  if (!report.warnings.empty()) j["warnings"] = report.warnings;
  return j;
}

std::string to_text(const RunReport& report) {
  std::ostringstream os;
  os << "source:          " << report.ensemble_or_source << '\n';
  os << "n:               " << report.n << '\n';
  if (report.seed) os << "seed:            " << *report.seed << '\n';
  if (report.acceptance_rate) {
    os << "acceptance rate: " << format_number(*report.acceptance_rate) << '\n';
  }
  if (report.unfold) os << "unfold:          " << *report.unfold << '\n';
  os << '\n' << std::left << std::setw(8) << "curve" << std::setw(16) << "KS d"
     << "p-value\n";
  for (const KsEntry& e : report.ks_results) {
    os << std::setw(8) << curves::curve_name(e.curve) << std::setw(16) << format_number(e.d)
       << format_number(e.p) << (e.curve == report.best_fit ? "  <- best fit" : "") << '\n';
  }
  for (const auto& w : report.warnings) os << "warning: " << w << '\n';
  os << "timestamp:       " << report.timestamp << '\n';
  return os.str();
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rmtlab::report
