#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "rmtlab/curves.hpp"
#include "rmtlab/stats.hpp"

namespace rmtlab::report {

struct KsEntry {
  curves::CurveKind curve;
  double d;
  double p;
};

struct RunReport {
  std::string ensemble_or_source;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> acceptance_rate;
  std::vector<KsEntry> ks_results;  // fixed curve order GOE, GUE, GSE, GPOE, GPUE
  curves::CurveKind best_fit = curves::CurveKind::GOE;
  std::string timestamp;
  std::optional<std::string> unfold;
  std::vector<std::string> warnings;
};

/// Minimum d; ties resolved by the fixed curve order.
curves::CurveKind best_fit(std::span<const KsEntry> entries);

/// Runs ks_test against each requested curve (deduplicated, reordered to
/// the fixed order) and fills ks_results and best_fit.
RunReport compare(std::string label, const stats::SpacingSample& sample,
                  std::span<const curves::CurveKind> against);

/// Key order: ensemble-or-source, n, seed, acceptance-rate, ks-results,
/// best-fit, timestamp, then unfold (analyze only) and warnings.
nlohmann::ordered_json to_json(const RunReport& report);
std::string to_text(const RunReport& report);

/// 12 significant digits, shortest representation ("%.12g"-style).
std::string format_number(double value);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace rmtlab::report
