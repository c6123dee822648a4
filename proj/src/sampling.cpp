#include "rmtlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace rmtlab::sampling {

using ensembles::EnsembleKind;
using ensembles::SamplerConfig;

namespace {

constexpr double kRejected = -1.0;
constexpr std::uint64_t kMinBatch = 1 << 14;

double spacing_or_rejected(const EnsembleKind& kind, const SamplerConfig& config,
                           std::uint64_t index) {
  const auto p = ensembles::draw_params(kind, config, index);
  const auto s = ensembles::spacing(ensembles::eigenvalues(kind, p));
  return s ? *s : kRejected;
}

void check_args(std::size_t n_accepted, const SamplerConfig& config) {
  config.validate();
  if (n_accepted < 1) {
    throw std::invalid_argument("n_accepted must be >= 1");
  }
}

}  // namespace

RawSpacings draw_spacings_serial(const EnsembleKind& kind, std::size_t n_accepted,
                                 const SamplerConfig& config) {
  check_args(n_accepted, config);
  RawSpacings out;
  out.spacings.reserve(n_accepted);
  std::uint64_t index = 0;
  while (out.spacings.size() < n_accepted) {
    const double s = spacing_or_rejected(kind, config, index++);
    if (s != kRejected) {
      out.spacings.push_back(s);
    }
  }
  out.draws = index;
  return out;
}

RawSpacings draw_spacings(const EnsembleKind& kind, std::size_t n_accepted,
                          const SamplerConfig& config) {
  check_args(n_accepted, config);
  RawSpacings out;
  out.spacings.reserve(n_accepted);
  std::vector<double> batch;
  std::uint64_t next = 0;
  while (out.spacings.size() < n_accepted) {
    // Size the batch from the acceptance seen so far; overshoot is discarded.
    const double rate = next == 0 ? 0.25 : std::max(out.acceptance_rate(), 0.01);
    const auto missing = static_cast<double>(n_accepted - out.spacings.size());
    const auto size = std::max<std::uint64_t>(kMinBatch,
                                              static_cast<std::uint64_t>(1.05 * missing / rate));
    batch.resize(size);
    const auto count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) num_threads(config.workers)
    for (std::int64_t i = 0; i < count; ++i) {
      batch[static_cast<std::size_t>(i)] =
          spacing_or_rejected(kind, config, next + static_cast<std::uint64_t>(i));
    }
    for (std::uint64_t i = 0; i < size && out.spacings.size() < n_accepted; ++i) {
      if (batch[i] != kRejected) {
        out.spacings.push_back(batch[i]);
      }
      out.draws = next + i + 1;
    }
    next += size;
  }
  return out;
}

std::uint64_t count_accepted(const EnsembleKind& kind, std::uint64_t n_draws,
                             const SamplerConfig& config) {
  config.validate();
  const auto count = static_cast<std::int64_t>(n_draws);
  std::uint64_t accepted = 0;
#pragma omp parallel for schedule(static) num_threads(config.workers) reduction(+ : accepted)
  for (std::int64_t i = 0; i < count; ++i) {
    if (spacing_or_rejected(kind, config, static_cast<std::uint64_t>(i)) != kRejected) {
      ++accepted;
    }
  }
  return accepted;
}

SampleResult sample_spacings(const EnsembleKind& kind, std::size_t n_accepted,
                             const SamplerConfig& config) {
  RawSpacings raw = draw_spacings(kind, n_accepted, config);
  const double rate = raw.acceptance_rate();
  const std::uint64_t draws = raw.draws;
  return {stats::normalize(std::move(raw.spacings)), rate, draws};
}

}  // namespace rmtlab::sampling
