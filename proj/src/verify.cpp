#include "rmtlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rmtlab/report.hpp"
#include "rmtlab/sampling.hpp"
#include "rmtlab/stats.hpp"

namespace rmtlab::verify {

using curves::CurveKind;
using ensembles::EnsembleKind;
using ensembles::Family;
using ensembles::SpectralParams;

namespace {

Eigen::VectorXd map_point(Family family, const Eigen::VectorXd& q) {
  SpectralParams sp{q(0), q(1), q(2), family == Family::GPUE ? q(3) : 0.0};
  const auto p = ensembles::spectral_to_params(family, sp);
  Eigen::VectorXd out(q.size());
  out(0) = p.a;
  out(1) = p.b;
  out(2) = p.c;
  if (family == Family::GPUE) out(3) = p.d;
  return out;
}

}  // namespace

double jacobian_determinant_fd(Family family, const SpectralParams& sp, double h) {
  const int dim = family == Family::GPUE ? 4 : 3;
  if (family != Family::GPOE && family != Family::GPUE) {
    throw std::invalid_argument("jacobian_determinant_fd: GPOE or GPUE only");
  }
  Eigen::VectorXd q(dim);
  q(0) = sp.t;
  q(1) = sp.s;
  q(2) = sp.theta;
  if (dim == 4) q(3) = sp.phi;
  Eigen::MatrixXd jac(dim, dim);
  for (int k = 0; k < dim; ++k) {
    Eigen::VectorXd up = q;
    Eigen::VectorXd down = q;
    up(k) += h;
    down(k) -= h;
    jac.col(k) = (map_point(family, up) - map_point(family, down)) / (2.0 * h);
  }
  return std::abs(jac.determinant());
}

double jacobian_determinant_exact(Family family, const SpectralParams& sp) {
  switch (family) {
    case Family::GPOE:
      return std::abs(sp.s) / 4.0;
    case Family::GPUE:
      return 0.5 * (sp.s * sp.s / 4.0) * std::abs(std::sinh(2.0 * sp.theta));
    default:
      throw std::invalid_argument("jacobian_determinant_exact: GPOE or GPUE only");
  }
}

double small_x_max_relative_deviation(CurveKind kind, int points) {
  double worst = 0.0;
  const double lo = 0.1;
  const double hi = 0.5;
  // The approximants are defined on the open interval, so the right end
  // node sits one ulp below 0.5.
  const double last = std::nextafter(hi, 0.0);
  for (int i = 0; i < points; ++i) {
    const double x = std::min(lo + (hi - lo) * i / (points - 1), last);
    const double exact = curves::pdf(kind, x);
    worst = std::max(worst, std::abs(exact - curves::small_x_approx(kind, x)) / exact);
  }
  return worst;
}

double mc_ks_distance(const EnsembleKind& kind, CurveKind curve, std::size_t n,
                      std::uint64_t seed) {
  const auto result = sampling::sample_spacings(kind, n, {1.0, seed, 1});
  return stats::ks_test(result.sample, curve).d;
}

namespace {

std::string fmt(double v) { return report::format_number(v); }

CheckResult within(std::string name, double value, double target, double tol) {
  const double dev = std::abs(value - target);
  return {std::move(name), "|" + fmt(value) + " - " + fmt(target) + "| <= " + fmt(tol), dev,
          dev <= tol};
}

}  // namespace

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;

  // Constants.
  const auto& gpoe = curves::constants(CurveKind::GPOE);
  const auto& gpue = curves::constants(CurveKind::GPUE);
  out.push_back(within("GPOE alpha", gpoe.alpha, 0.5818, 5e-5));
  out.push_back(within("GPOE beta", gpoe.beta, 0.4569, 5e-5));
  out.push_back(within("GPUE alpha", gpue.alpha, 2.5433, 5e-4));
  out.push_back(within("GPUE beta", gpue.beta, 0.5267, 5e-4));
  out.push_back(within("GPUE gamma", gpue.gamma, 1.0263, 5e-4));

  // Normalization and unit mean.
  for (CurveKind k : curves::kAllCurves) {
    const std::string name(curves::curve_name(k));
    out.push_back(within(name + " moment 0", curves::moment(k, 0), 1.0, 1e-8));
    out.push_back(within(name + " moment 1", curves::moment(k, 1), 1.0, 1e-6));
  }

  // Jacobians of the spectral parameterizations.
  std::mt19937_64 gen(options.seed);
  std::uniform_real_distribution<double> t_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> s_dist(0.5, 3.0);
  std::uniform_real_distribution<double> theta_dist(0.1, 1.5);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  for (Family family : {Family::GPOE, Family::GPUE}) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const SpectralParams sp{t_dist(gen), s_dist(gen), theta_dist(gen), phi_dist(gen)};
      const double exact = jacobian_determinant_exact(family, sp);
      worst = std::max(worst, std::abs(jacobian_determinant_fd(family, sp) - exact) / exact);
    }
    out.push_back({std::string(ensembles::family_name(family)) + " Jacobian (100 points)",
                   "max rel dev <= 1e-6", worst, worst <= 1e-6});
  }

  // Rejection rates over 1e5 raw draws.
  constexpr std::uint64_t kDraws = 100000;
  const ensembles::SamplerConfig cfg{1.0, options.seed, 1};
  const double gpoe_rate =
      static_cast<double>(sampling::count_accepted(EnsembleKind::gpoe(), kDraws, cfg)) / kDraws;
  const double gpue_rate =
      static_cast<double>(sampling::count_accepted(EnsembleKind::gpue(), kDraws, cfg)) / kDraws;
  out.push_back(within("GPOE acceptance", gpoe_rate, 0.5, 0.005));
  out.push_back(within("GPUE acceptance", gpue_rate, 1.0 - std::numbers::sqrt2 / 2.0, 0.005));

  // Reduced Monte Carlo against the analytic curves: the matching curve must
  // pass KS at the 1% level and be the best fit.
  const std::size_t n = options.mc_samples;
  const double critical = 1.63 / std::sqrt(static_cast<double>(n));
  const std::vector<std::pair<EnsembleKind, CurveKind>> pairs = {
      {EnsembleKind::goe(), CurveKind::GOE},     {EnsembleKind::gue(), CurveKind::GUE},
      {EnsembleKind::gse(), CurveKind::GSE},     {EnsembleKind::gpoe(), CurveKind::GPOE},
      {EnsembleKind::gpue(), CurveKind::GPUE},   {EnsembleKind::qh3(1.0), CurveKind::GOE},
      {EnsembleKind::qh4(0.0), CurveKind::GUE}};
  for (const auto& [kind, curve] : pairs) {
    const auto result = sampling::sample_spacings(kind, n, {1.0, options.seed, 1});
    const auto rep = report::compare(kind.name(), result.sample, curves::kAllCurves);
    double d_match = 0.0;
    for (const auto& e : rep.ks_results) {
      if (e.curve == curve) d_match = e.d;
    }
    const std::string label = kind.name() + " vs " + std::string(curves::curve_name(curve));
    out.push_back({label + " MC KS", "d < " + fmt(critical), d_match, d_match < critical});
    out.push_back({label + " MC best fit", "best fit is " + std::string(curves::curve_name(curve)),
                   rep.best_fit == curve ? 1.0 : 0.0, rep.best_fit == curve});
  }

  // Small-spacing approximants, bounds pinned from a high-precision oracle.
  const double gpoe_dev = small_x_max_relative_deviation(CurveKind::GPOE);
  const double gpue_dev = small_x_max_relative_deviation(CurveKind::GPUE);
  constexpr double kGpoeDev = 0.018946;
  constexpr double kGpueDev = 0.033326;
  out.push_back({"GPOE small-x approximant", "max rel dev in [0.8, 1.2] x " + fmt(kGpoeDev),
                 gpoe_dev, gpoe_dev >= 0.8 * kGpoeDev && gpoe_dev <= 1.2 * kGpoeDev});
  out.push_back({"GPUE small-x approximant", "max rel dev in [0.8, 1.2] x " + fmt(kGpueDev),
                 gpue_dev, gpue_dev >= 0.8 * kGpueDev && gpue_dev <= 1.2 * kGpueDev});

  // Repulsion ordering at small spacing.
  bool ordered = true;
  for (int i = 1; i <= 7; ++i) {
    const double x = 0.05 * i;
    ordered = ordered && curves::pdf(CurveKind::GPOE, x) > curves::pdf(CurveKind::GPUE, x) &&
              curves::pdf(CurveKind::GPUE, x) > curves::pdf(CurveKind::GOE, x) &&
              curves::pdf(CurveKind::GOE, x) > curves::pdf(CurveKind::GUE, x) &&
              curves::pdf(CurveKind::GUE, x) > curves::pdf(CurveKind::GSE, x);
  }
  out.push_back({"repulsion ordering x=0.05..0.35", "GPOE > GPUE > GOE > GUE > GSE",
                 ordered ? 1.0 : 0.0, ordered});
  return out;
}

}  // namespace rmtlab::verify
