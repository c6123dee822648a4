#include "rmtlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <omp.h>

#include "rmtlab/specfun.hpp"

namespace rmtlab::stats {

SpacingSample normalize(std::vector<double> raw) {
  if (raw.empty()) {
    throw StatsError("normalize: empty spacing list");
  }
  double sum = 0.0;
  for (double s : raw) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw StatsError("normalize: spacings must be finite and nonnegative");
    }
    sum += s;
  }
  const double mean = sum / static_cast<double>(raw.size());
  if (!(mean > 0.0)) {
    throw StatsError("normalize: mean spacing is zero");
  }
  SpacingSample out;
  out.normalized.reserve(raw.size());
  for (double s : raw) {
    out.normalized.push_back(s / mean);
  }
  out.raw = std::move(raw);
  out.mean = mean;
  return out;
}

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) {
    return 1.0;
  }
  constexpr double kTol = 1e-16;
  if (lambda < 1.18) {
    // Q = 1 - (√(2π)/λ) Σ exp(-(2k-1)²π²/(8λ²))
    const double base = -std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(odd * odd * base);
      sum += term;
      if (term < kTol * sum) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < kTol) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_distance_serial(std::span<const double> sorted, curves::CurveKind kind) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = curves::cdf(kind, sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_distance(std::span<const double> sorted, curves::CurveKind kind) {
  curves::cdf(kind, 1.0);  // build the shared table before fanning out
  const auto count = static_cast<std::ptrdiff_t>(sorted.size());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
#pragma omp parallel for schedule(static) reduction(max : d)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const double f = curves::cdf(kind, sorted[static_cast<std::size_t>(i)]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

KsResult ks_test(const SpacingSample& sample, curves::CurveKind kind) {
  if (sample.normalized.empty()) {
    throw StatsError("ks_test: empty sample");
  }
  std::vector<double> sorted = sample.normalized;
  std::sort(sorted.begin(), sorted.end());
  const double d = ks_distance(sorted, kind);
  const double lambda = std::sqrt(static_cast<double>(sorted.size())) * d;
  return {d, sorted.size(), kolmogorov_survival(lambda)};
}

Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins < 1) {
    throw StatsError("histogram: need at least one bin");
  }
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw StatsError("histogram: invalid range");
  }
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.edges[k] = lo + width * static_cast<double>(k);
  }
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);
  h.total = values.size();
  for (double v : values) {
    if (!(v >= lo && v < hi)) {
      ++h.out_of_range;
      continue;
    }
    auto k = static_cast<std::size_t>((v - lo) / width);
    // Rounding can push v just onto the wrong side of an edge.
    k = std::min(k, bins - 1);
    while (k > 0 && v < h.edges[k]) --k;
    while (k + 1 < bins && v >= h.edges[k + 1]) ++k;
    ++h.counts[k];
  }
  h.density.resize(bins);
  const double n = h.total > 0 ? static_cast<double>(h.total) : 1.0;
  for (std::size_t k = 0; k < bins; ++k) {
    h.density[k] = static_cast<double>(h.counts[k]) / (n * (h.edges[k + 1] - h.edges[k]));
  }
  return h;
}

Histogram histogram(const SpacingSample& sample, std::size_t bins, double lo, double hi) {
  return histogram(std::span<const double>(sample.normalized), bins, lo, hi);
}

ChiSquareResult chi_square(const Histogram& hist, curves::CurveKind kind, double min_expected) {
  if (hist.total == 0) {
    throw StatsError("chi_square: empty histogram");
  }
  if (!(min_expected > 0.0)) {
    throw StatsError("chi_square: min_expected must be positive");
  }
  const double n = static_cast<double>(hist.total);
  std::vector<double> observed;
  std::vector<double> expected;
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  double lower_cdf = curves::cdf(kind, std::max(0.0, hist.edges.front()));
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    const double upper_cdf = curves::cdf(kind, std::max(0.0, hist.edges[k + 1]));
    obs_acc += static_cast<double>(hist.counts[k]);
    exp_acc += n * (upper_cdf - lower_cdf);
    lower_cdf = upper_cdf;
    if (exp_acc >= min_expected) {
      observed.push_back(obs_acc);
      expected.push_back(exp_acc);
      obs_acc = 0.0;
      exp_acc = 0.0;
    }
  }
  if (obs_acc > 0.0 || exp_acc > 0.0) {
    if (expected.empty()) {
      observed.push_back(obs_acc);
      expected.push_back(exp_acc);
    } else {
      observed.back() += obs_acc;
      expected.back() += exp_acc;
    }
  }
  if (expected.size() < 2) {
    throw StatsError("chi_square: fewer than 2 bins after merging");
  }
  double statistic = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const double diff = observed[k] - expected[k];
    statistic += diff * diff / expected[k];
  }
  const int dof = static_cast<int>(expected.size()) - 1;
  const double p = specfun::gamma_q(0.5 * dof, 0.5 * statistic);
  return {statistic, dof, p, p < 1e-3};
}

}  // namespace rmtlab::stats
