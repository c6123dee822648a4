#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmtlab/curves.hpp"
#include "rmtlab/ensembles.hpp"

// Self-check machinery shared by `rmtlab verify` and the acceptance suite.
namespace rmtlab::verify {

/// |det ∂(a,b,c[,d]) / ∂(t,s,θ[,φ])| by central differences with step h.
/// GPOE uses the 3x3 map, GPUE the 4x4 map.
double jacobian_determinant_fd(ensembles::Family family, const ensembles::SpectralParams& sp,
                               double h = 1e-5);

/// Analytic value of that determinant: |s|/4 for GPOE and
/// (1/2)(s²/4) sinh 2θ for GPUE (the 1/2 comes from a = t/2).
double jacobian_determinant_exact(ensembles::Family family, const ensembles::SpectralParams& sp);

/// Largest relative deviation of pdf from small_x_approx over a uniform
/// grid on [0.1, 0.5].
double small_x_max_relative_deviation(curves::CurveKind kind, int points = 4001);

/// KS distance of n accepted MC spacings of `kind` against `curve`.
double mc_ks_distance(const ensembles::EnsembleKind& kind, curves::CurveKind curve,
                      std::size_t n, std::uint64_t seed);

struct CheckResult {
  std::string name;
  std::string tolerance;
  double value;
  bool pass;
};

struct VerifyOptions {
  std::size_t mc_samples = 20000;
  std::uint64_t seed = 42;
};

/// Constants, normalization, Jacobian, rejection-rate and reduced
/// Monte Carlo checks, in a fixed order.
std::vector<CheckResult> run_checks(const VerifyOptions& options = {});

}  // namespace rmtlab::verify
