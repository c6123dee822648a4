#include "rmtlab/ensembles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>

#include "rmtlab/counter_rng.hpp"

namespace rmtlab::ensembles {

using cd = std::complex<double>;

EnsembleKind EnsembleKind::qh3(double kappa) { return of(Family::QH3, kappa); }
EnsembleKind EnsembleKind::qh4(double kappa) { return of(Family::QH4, kappa); }

EnsembleKind EnsembleKind::of(Family family, std::optional<double> kappa) {
  const bool quasi = family == Family::QH3 || family == Family::QH4;
  if (!quasi) {
    if (kappa) {
      throw std::invalid_argument("kappa applies only to QH3 and QH4");
    }
    return EnsembleKind(family, 0.0);
  }
  const double k = kappa.value_or(0.0);
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("kappa must be a finite nonnegative number");
  }
  return EnsembleKind(family, k);
}

std::optional<Family> EnsembleKind::parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "goe") return Family::GOE;
  if (lower == "gue") return Family::GUE;
  if (lower == "gse") return Family::GSE;
  if (lower == "gpoe") return Family::GPOE;
  if (lower == "gpue") return Family::GPUE;
  if (lower == "qh3") return Family::QH3;
  if (lower == "qh4") return Family::QH4;
  return std::nullopt;
}

std::optional<double> EnsembleKind::kappa() const {
  if (quasi_hermitian()) {
    return kappa_;
  }
  return std::nullopt;
}

int EnsembleKind::parameter_count() const {
  switch (family_) {
    case Family::GOE:
    case Family::GPOE:
    case Family::QH3:
      return 3;
    case Family::GUE:
    case Family::GPUE:
    case Family::QH4:
      return 4;
    case Family::GSE:
      return 6;
  }
  return 0;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::GOE: return "GOE";
    case Family::GUE: return "GUE";
    case Family::GSE: return "GSE";
    case Family::GPOE: return "GPOE";
    case Family::GPUE: return "GPUE";
    case Family::QH3: return "QH3";
    case Family::QH4: return "QH4";
  }
  return "?";
}

std::string EnsembleKind::name() const {
  std::string out(family_name(family_));
  if (quasi_hermitian()) {
    std::ostringstream os;
    os << "(kappa=" << kappa_ << ")";
    out += os.str();
  }
  return out;
}

void validate(const EnsembleKind& kind, const ParamVector& p) {
  const double entries[6] = {p.a, p.b, p.c, p.d, p.e, p.f};
  const int active = kind.parameter_count();
  for (int i = 0; i < 6; ++i) {
    if (!std::isfinite(entries[i])) {
      throw std::invalid_argument("ParamVector entries must be finite");
    }
    if (i >= active && entries[i] != 0.0) {
      throw std::invalid_argument("ParamVector has nonzero entries unused by " + kind.name());
    }
  }
}

void SamplerConfig::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be positive and finite");
  }
  if (workers < 1) {
    throw std::invalid_argument("workers must be >= 1");
  }
}

ParamVector parameter_scales(const EnsembleKind& kind, double sigma) {
  const double base = sigma / std::sqrt(2.0);
  const double dressed = kind.quasi_hermitian()
                             ? sigma / std::sqrt(2.0 * std::cosh(2.0 * *kind.kappa()))
                             : base;
  switch (kind.family()) {
    case Family::GOE:
    case Family::GPOE:
      return {base, base, base, 0.0, 0.0, 0.0};
    case Family::GUE:
    case Family::GPUE:
      return {base, base, base, base, 0.0, 0.0};
    case Family::GSE:
      return {base, base, base, base, base, base};
    case Family::QH3:
      return {base, dressed, dressed, 0.0, 0.0, 0.0};
    case Family::QH4:
      return {base, base, dressed, dressed, 0.0, 0.0};
  }
  return {};
}

ParamVector draw_params(const EnsembleKind& kind, const SamplerConfig& config,
                        std::uint64_t stream_index) {
  const CounterRng rng(config.seed);
  const ParamVector scale = parameter_scales(kind, config.sigma);
  const int active = kind.parameter_count();
  double z[6] = {};
  for (int pair = 0; 2 * pair < active; ++pair) {
    const auto [z0, z1] = rng.normal_pair(stream_index, static_cast<std::uint64_t>(pair));
    z[2 * pair] = z0;
    z[2 * pair + 1] = z1;
  }
  ParamVector p;
  p.a = scale.a * z[0];
  p.b = scale.b * z[1];
  p.c = scale.c * z[2];
  if (active >= 4) p.d = scale.d * z[3];
  if (active >= 6) {
    p.e = scale.e * z[4];
    p.f = scale.f * z[5];
  }
  return p;
}

EigenOutcome eigenvalues(const EnsembleKind& kind, const ParamVector& p) {
  double radicand = 0.0;
  switch (kind.family()) {
    case Family::GOE:
    case Family::QH3:
      radicand = p.b * p.b + p.c * p.c;
      break;
    case Family::GUE:
    case Family::QH4:
      radicand = p.b * p.b + p.c * p.c + p.d * p.d;
      break;
    case Family::GSE:
      radicand = p.b * p.b + p.c * p.c + p.d * p.d + p.e * p.e + p.f * p.f;
      break;
    case Family::GPOE:
      if (p.b * p.b < p.c * p.c) {
        return ComplexRejected{};
      }
      radicand = p.b * p.b - p.c * p.c;
      break;
    case Family::GPUE: {
      // (a - λ)² = b² - c² - d² for the matrix [[a+b, d+ic], [-d+ic, a-b]].
      const double off = p.c * p.c + p.d * p.d;
      if (p.b * p.b < off) {
        return ComplexRejected{};
      }
      radicand = p.b * p.b - off;
      break;
    }
  }
  const double half_gap = std::sqrt(radicand);
  return RealPair{p.a + half_gap, p.a - half_gap};
}

std::optional<double> spacing(const EigenOutcome& outcome) {
  if (const auto* pair = std::get_if<RealPair>(&outcome)) {
    return pair->upper - pair->lower;
  }
  return std::nullopt;
}

ParamVector spectral_to_params(Family family, const SpectralParams& sp) {
  if (family != Family::GPOE && family != Family::GPUE) {
    throw std::invalid_argument("spectral_to_params: GPOE or GPUE only");
  }
  if (!(sp.s >= 0.0)) {
    throw std::invalid_argument("spectral_to_params: s must be nonnegative");
  }
  const double half_s = 0.5 * sp.s;
  ParamVector p;
  p.a = 0.5 * sp.t;
  p.b = half_s * std::cosh(2.0 * sp.theta);
  const double sh = half_s * std::sinh(2.0 * sp.theta);
  if (family == Family::GPOE) {
    p.c = -sh;
  } else {
    p.c = -sh * std::cos(sp.phi);
    p.d = sh * std::sin(sp.phi);
  }
  return p;
}

namespace {

double epsilon_of(const EnsembleKind& kind) { return std::exp(-*kind.kappa()); }

}  // namespace

Eigen::MatrixXcd realize_matrix(const EnsembleKind& kind, const ParamVector& p) {
  const cd i(0.0, 1.0);
  const double alpha = p.a + p.b;
  const double beta = p.a - p.b;
  Eigen::MatrixXcd h;
  switch (kind.family()) {
    case Family::GOE:
      h.resize(2, 2);
      h << alpha, p.c, p.c, beta;
      break;
    case Family::GUE: {
      const cd gamma(p.c, p.d);
      h.resize(2, 2);
      h << alpha, gamma, std::conj(gamma), beta;
      break;
    }
    case Family::GSE: {
      const cd gamma(p.c, p.d);
      const cd delta(p.e, p.f);
      h.resize(4, 4);
      h << alpha, 0.0, std::conj(gamma), -delta,
           0.0, alpha, std::conj(delta), gamma,
           gamma, delta, beta, 0.0,
           -std::conj(delta), std::conj(gamma), 0.0, beta;
      break;
    }
    case Family::GPOE:
      h.resize(2, 2);
      h << alpha, i * p.c, i * p.c, beta;
      break;
    case Family::GPUE:
      h.resize(2, 2);
      h << alpha, p.d + i * p.c, -p.d + i * p.c, beta;
      break;
    case Family::QH3: {
      const double eps = epsilon_of(kind);
      h.resize(2, 2);
      h << p.a, cd(p.b, p.c) / eps, cd(p.b, -p.c) * eps, p.a;
      break;
    }
    case Family::QH4: {
      const double eps = epsilon_of(kind);
      const cd gamma(p.c, p.d);
      h.resize(2, 2);
      h << alpha, gamma / eps, std::conj(gamma) * eps, beta;
      break;
    }
  }
  return h;
}

Eigen::MatrixXcd metric(const EnsembleKind& kind) {
  Eigen::MatrixXcd eta = Eigen::MatrixXcd::Zero(2, 2);
  switch (kind.family()) {
    case Family::GPOE:
    case Family::GPUE:
      eta(0, 0) = 1.0;
      eta(1, 1) = -1.0;
      return eta;
    case Family::QH3:
    case Family::QH4: {
      const double eps = epsilon_of(kind);
      eta(0, 0) = eps;
      eta(1, 1) = 1.0 / eps;
      return eta;
    }
    default:
      throw std::invalid_argument("metric: " + kind.name() + " is Hermitian; no pseudo-metric");
  }
}

double pseudo_hermiticity_residual(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& eta) {
  const Eigen::MatrixXcd diff = eta * h * eta.inverse() - h.adjoint();
  return diff.cwiseAbs().maxCoeff();
}

double pseudo_hermiticity_residual(const EnsembleKind& kind, const ParamVector& p) {
  return pseudo_hermiticity_residual(realize_matrix(kind, p), metric(kind));
}

double hermiticity_residual(const EnsembleKind& kind, const ParamVector& p) {
  switch (kind.family()) {
    case Family::GOE:
    case Family::GUE:
    case Family::GSE: {
      const Eigen::MatrixXcd h = realize_matrix(kind, p);
      return (h - h.adjoint()).cwiseAbs().maxCoeff();
    }
    default:
      throw std::invalid_argument("hermiticity_residual: " + kind.name() +
                                  " is not Hermitian; use pseudo_hermiticity_residual");
  }
}

}  // namespace rmtlab::ensembles
