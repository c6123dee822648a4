#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rmtlab/curves.hpp"

namespace rmtlab::stats {

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw spacings with their mean and the unit-mean normalized values
/// x_i = raw_i / mean, in input order.
struct SpacingSample {
  std::vector<double> raw;
  double mean = 0.0;
  std::vector<double> normalized;

  std::size_t size() const { return raw.size(); }
};

/// Throws StatsError for empty input, negative or non-finite entries, or a
/// zero mean.
SpacingSample normalize(std::vector<double> raw);

struct KsResult {
  double d;
  std::size_t n;
  double p_value;
};

/// Asymptotic Kolmogorov survival function Q(λ) = P(√n D > λ).
double kolmogorov_survival(double lambda);

/// sup |F_n - F| over already sorted values, evaluated at the two sides of
/// every step. Parallel version splits the points across OpenMP threads.
double ks_distance(std::span<const double> sorted, curves::CurveKind kind);
double ks_distance_serial(std::span<const double> sorted, curves::CurveKind kind);

/// One-sample two-sided KS test of the normalized spacings; the p-value
/// comes from the asymptotic distribution (appropriate for n >~ 100).
KsResult ks_test(const SpacingSample& sample, curves::CurveKind kind);

struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
  std::vector<double> density;  // count / (n * width)
  std::size_t total = 0;         // all samples, in range or not
  std::size_t out_of_range = 0;
};

/// Equal-width bins on [lo, hi) over the normalized spacings.
Histogram histogram(const SpacingSample& sample, std::size_t bins, double lo, double hi);
Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

struct ChiSquareResult {
  double statistic;
  int dof;
  double p_value;
  bool flagged;  // p_value < 1e-3
};

/// Pearson chi-square against total * (cdf(hi) - cdf(lo)) per bin. Bins with
/// expected count below min_expected are merged rightward; a short remainder
/// at the right end joins the last merged bin. dof = merged bins - 1.
ChiSquareResult chi_square(const Histogram& hist, curves::CurveKind kind,
                           double min_expected = 5.0);

}  // namespace rmtlab::stats
