#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

// The seven samplable 2x2 (4x4 for GSE) matrix families, their Gaussian
// parameter laws, closed-form eigenvalues and explicit matrix realizations.
namespace rmtlab::ensembles {

enum class Family { GOE, GUE, GSE, GPOE, GPUE, QH3, QH4 };

/// A family plus, for the quasi-Hermitian families, the metric parameter
/// kappa (ε = exp(-kappa)).
class EnsembleKind {
 public:
  static EnsembleKind goe() { return EnsembleKind(Family::GOE, 0.0); }
  static EnsembleKind gue() { return EnsembleKind(Family::GUE, 0.0); }
  static EnsembleKind gse() { return EnsembleKind(Family::GSE, 0.0); }
  static EnsembleKind gpoe() { return EnsembleKind(Family::GPOE, 0.0); }
  static EnsembleKind gpue() { return EnsembleKind(Family::GPUE, 0.0); }
  static EnsembleKind qh3(double kappa);
  static EnsembleKind qh4(double kappa);
  static EnsembleKind of(Family family, std::optional<double> kappa = std::nullopt);

  /// Case-insensitive "goe", "gue", ..., "qh4".
  static std::optional<Family> parse_family(std::string_view name);

  Family family() const { return family_; }
  /// kappa is present only for QH3/QH4.
  std::optional<double> kappa() const;
  bool quasi_hermitian() const { return family_ == Family::QH3 || family_ == Family::QH4; }
  /// Number of meaningful entries in ParamVector: 3, 4 or 6.
  int parameter_count() const;
  /// "GOE", ..., "QH4(kappa=0.5)".
  std::string name() const;

  friend bool operator==(const EnsembleKind&, const EnsembleKind&) = default;

 private:
  EnsembleKind(Family family, double kappa) : family_(family), kappa_(kappa) {}
  Family family_;
  double kappa_;
};

std::string_view family_name(Family family);

/// Real Gaussian matrix parameters; entries past the kind's parameter count
/// are exactly zero.
struct ParamVector {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

/// Throws std::invalid_argument when p has non-finite entries or nonzero
/// entries beyond the kind's parameter count.
void validate(const EnsembleKind& kind, const ParamVector& p);

struct RealPair {
  double upper;  // E1
  double lower;  // E2 <= E1
};
struct ComplexRejected {};
using EigenOutcome = std::variant<RealPair, ComplexRejected>;

struct SamplerConfig {
  double sigma = 1.0;
  std::uint64_t seed = 0;
  int workers = 1;

  void validate() const;
};

/// (t, s, theta[, phi]) with t = E1 + E2 and s = E1 - E2 >= 0.
struct SpectralParams {
  double t = 0.0;
  double s = 0.0;
  double theta = 0.0;
  double phi = 0.0;  // GPUE only
};

/// Standard deviation of each of the six parameters under the Gaussian
/// measure exp(-Tr(H H†) / 2σ²) with global trace factors absorbed:
/// σ/√2 for every active parameter, except that the off-diagonal
/// parameters of QH3 (b, c) and QH4 (c, d) carry σ/√(2 cosh 2κ).
ParamVector parameter_scales(const EnsembleKind& kind, double sigma);

/// Parameters for draw number `stream_index` of the stream keyed by
/// config.seed. A pure function of its arguments.
ParamVector draw_params(const EnsembleKind& kind, const SamplerConfig& config,
                        std::uint64_t stream_index);

/// Closed-form eigenvalues. GPOE is real iff b² >= c², GPUE iff b² >= c² + d²;
/// every other family is always real. GSE returns its two distinct
/// (Kramers-degenerate) levels.
EigenOutcome eigenvalues(const EnsembleKind& kind, const ParamVector& p);

/// E1 - E2 for a real pair, nullopt for a rejected outcome.
std::optional<double> spacing(const EigenOutcome& outcome);

/// The pseudo-orthogonal (GPOE) and pseudo-unitary (GPUE) parameterizations
///   a = t/2, b = (s/2) cosh 2θ, c = -(s/2) sinh 2θ [cos φ], d = (s/2) sinh 2θ sin φ.
ParamVector spectral_to_params(Family family, const SpectralParams& sp);

/// Explicit matrix with entries exactly as in the defining forms.
Eigen::MatrixXcd realize_matrix(const EnsembleKind& kind, const ParamVector& p);

/// η for the pseudo-Hermitian families: diag(1, -1) for GPOE/GPUE and
/// diag(ε, 1/ε) for QH3/QH4. Throws std::invalid_argument otherwise.
Eigen::MatrixXcd metric(const EnsembleKind& kind);

/// max |(η H η⁻¹ - H†)_ij|.
double pseudo_hermiticity_residual(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& eta);
/// Residual of the kind's realized matrix; GPOE/GPUE/QH3/QH4 only.
double pseudo_hermiticity_residual(const EnsembleKind& kind, const ParamVector& p);
/// max |(H - H†)_ij|; GOE/GUE/GSE only.
double hermiticity_residual(const EnsembleKind& kind, const ParamVector& p);

}  // namespace rmtlab::ensembles
