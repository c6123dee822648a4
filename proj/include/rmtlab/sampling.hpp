#pragma once

#include <cstdint>
#include <vector>

#include "rmtlab/ensembles.hpp"
#include "rmtlab/stats.hpp"

// Monte Carlo realization of the spacing distributions: draw Gaussian
// parameters, keep the draws with a real eigenvalue pair, record E1 - E2.
//
// Output is the first n accepted draws in draw-index order. Because every
// draw is a pure function of (seed, index), the parallel kernel returns the
// same sequence as the serial reference for any worker count.
namespace rmtlab::sampling {

struct RawSpacings {
  std::vector<double> spacings;
  std::uint64_t draws = 0;  // raw draws consumed, up to and including the last accepted one

  double acceptance_rate() const {
    return draws == 0 ? 0.0 : static_cast<double>(spacings.size()) / static_cast<double>(draws);
  }
};

/// OpenMP kernel; config.workers threads.
RawSpacings draw_spacings(const ensembles::EnsembleKind& kind, std::size_t n_accepted,
                          const ensembles::SamplerConfig& config);

/// Single-threaded reference with the same output contract.
RawSpacings draw_spacings_serial(const ensembles::EnsembleKind& kind, std::size_t n_accepted,
                                 const ensembles::SamplerConfig& config);

/// Number of accepted draws among draw indices [0, n_draws).
std::uint64_t count_accepted(const ensembles::EnsembleKind& kind, std::uint64_t n_draws,
                             const ensembles::SamplerConfig& config);

struct SampleResult {
  stats::SpacingSample sample;
  double acceptance_rate;
  std::uint64_t draws;
};

/// Exactly n_accepted spacings, normalized to unit mean.
SampleResult sample_spacings(const ensembles::EnsembleKind& kind, std::size_t n_accepted,
                             const ensembles::SamplerConfig& config);

}  // namespace rmtlab::sampling
