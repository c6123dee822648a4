#include "rmtlab/curves.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rmtlab/specfun.hpp"

namespace rmtlab::curves {

namespace {

constexpr double kPi = std::numbers::pi;

// CDF tabulation grid.
constexpr int kCells = 4096;
constexpr double kGridMax = 8.0;
constexpr double kCellWidth = kGridMax / kCells;

std::size_t index_of(CurveKind kind) { return static_cast<std::size_t>(kind); }

CurveConstants make_constants(CurveKind kind) {
  switch (kind) {
    case CurveKind::GOE:
      return {kPi / 2.0, kPi / 4.0, 0.0, 0.0};
    case CurveKind::GUE:
      return {32.0 / (kPi * kPi), 4.0 / kPi, 0.0, 0.0};
    case CurveKind::GSE:
      return {std::ldexp(1.0, 18) / (729.0 * kPi * kPi * kPi), 64.0 / (9.0 * kPi), 0.0, 0.0};
    case CurveKind::GPOE: {
      // Γ⁴(-1/4) is positive; only |Γ| matters.
      const double g_m14 = specfun::ln_gamma(-0.25).log_abs;
      const double g_34 = specfun::ln_gamma(0.75).log_abs;
      return {std::exp(4.0 * g_m14) / (32.0 * kPi * kPi * kPi),
              2.0 * std::exp(4.0 * g_34) / (kPi * kPi), 0.0, 0.0};
    }
    case CurveKind::GPUE: {
      const double r2 = std::numbers::sqrt2;
      const double B = 2.0 * (r2 - std::log(1.0 + r2)) / (std::sqrt(kPi) * (r2 - 1.0));
      return {B * B / (2.0 * (r2 - 1.0)), B * B / 4.0, B / r2, B};
    }
  }
  return {};
}

const std::array<CurveConstants, 5>& all_constants() {
  static const std::array<CurveConstants, 5> table = [] {
    std::array<CurveConstants, 5> t{};
    for (CurveKind k : kAllCurves) t[index_of(k)] = make_constants(k);
    return t;
  }();
  return table;
}

const specfun::QuadratureSpec kCellSpec{1e-16, 1e-13, 200};

struct CdfTable {
  std::vector<double> nodes;  // nodes[k] = ∫₀^{k h} pdf, k = 0..kCells
};

const std::array<CdfTable, 5>& cdf_tables() {
  static const std::array<CdfTable, 5> tables = [] {
    std::array<CdfTable, 5> t;
    for (CurveKind kind : kAllCurves) {
      auto& nodes = t[index_of(kind)].nodes;
      nodes.resize(kCells + 1);
      nodes[0] = 0.0;
      const auto f = [kind](double x) { return pdf(kind, x); };
      for (int k = 0; k < kCells; ++k) {
        const double lo = k * kCellWidth;
        nodes[k + 1] = nodes[k] + specfun::integrate(f, {lo, lo + kCellWidth}, kCellSpec).value;
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

std::string_view curve_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::GOE: return "GOE";
    case CurveKind::GUE: return "GUE";
    case CurveKind::GSE: return "GSE";
    case CurveKind::GPOE: return "GPOE";
    case CurveKind::GPUE: return "GPUE";
  }
  return "?";
}

std::optional<CurveKind> parse_curve(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (CurveKind k : kAllCurves) {
    if (upper == curve_name(k)) return k;
  }
  return std::nullopt;
}

const CurveConstants& constants(CurveKind kind) { return all_constants()[index_of(kind)]; }

double pdf(CurveKind kind, double x) {
  if (!(x >= 0.0)) {
    throw specfun::DomainError("pdf: spacing must be nonnegative");
  }
  if (x == 0.0 || std::isinf(x)) {
    return 0.0;
  }
  const CurveConstants& k = constants(kind);
  const double x2 = x * x;
  switch (kind) {
    case CurveKind::GOE:
    case CurveKind::GUE:
    case CurveKind::GSE: {
      const int power = kind == CurveKind::GOE ? 1 : kind == CurveKind::GUE ? 2 : 4;
      return k.alpha * std::pow(x, power) * std::exp(-k.beta * x2);
    }
    case CurveKind::GPOE: {
      const double arg = k.beta * x2;
      if (arg == 0.0) {
        // x K0(βx²) with K0(z) ~ -ln(z/2) - γ
        return k.alpha * x *
               (-std::log(k.beta) - 2.0 * std::log(x) + std::numbers::ln2 - std::numbers::egamma);
      }
      return k.alpha * x * specfun::bessel_k0(arg);
    }
    case CurveKind::GPUE:
      // exp(βx²) erfc(γx) = exp((β - γ²)x²) erfcx(γx), and β - γ² = -β.
      return k.alpha * x * std::exp(-k.beta * x2) * specfun::erfcx(k.gamma * x);
  }
  return 0.0;
}

double cdf(CurveKind kind, double x) {
  if (!(x >= 0.0)) {
    throw specfun::DomainError("cdf: spacing must be nonnegative");
  }
  const auto& nodes = cdf_tables()[index_of(kind)].nodes;
  const auto f = [kind](double t) { return pdf(kind, t); };
  double value;
  if (x >= kGridMax) {
    const specfun::Interval tail = std::isinf(x) ? specfun::Interval::to_infinity(kGridMax)
                                                 : specfun::Interval{kGridMax, x};
    value = nodes[kCells] + specfun::integrate(f, tail, kCellSpec).value;
  } else {
    const int cell = std::min(static_cast<int>(x / kCellWidth), kCells - 1);
    const double lo = cell * kCellWidth;
    value = nodes[cell] + specfun::integrate(f, {lo, x}, kCellSpec).value;
  }
  return std::clamp(value, 0.0, 1.0);
}

double moment(CurveKind kind, int k) {
  if (k < 0 || k > 4) {
    throw specfun::DomainError("moment: order must be in [0, 4]");
  }
  const auto f = [kind, k](double x) { return std::pow(x, k) * pdf(kind, x); };
  return specfun::integrate(f, specfun::Interval::to_infinity(0.0), {1e-14, 1e-13, 4000}).value;
}

double quantile(CurveKind kind, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw specfun::DomainError("quantile: probability must be in (0, 1)");
  }
  double lo = 0.0;
  double hi = 16.0;
  double x = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double residual = cdf(kind, x) - p;
    if (residual > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double density = pdf(kind, x);
    double next = density > 0.0 ? x - residual / density : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, x) || hi - lo <= 1e-15 * hi) {
      return next;
    }
    x = next;
  }
  return x;
}

double small_x_approx(CurveKind kind, double x) {
  if (!(x > 0.0 && x < 0.5)) {
    throw specfun::DomainError("small_x_approx: defined on 0 < x < 0.5");
  }
  switch (kind) {
    case CurveKind::GPOE:
      return (0.5 - 1.2 * std::log(x)) * x;
    case CurveKind::GPUE:
      return 2.5 * x * (1.0 - 0.95 * x);
    default:
      throw specfun::DomainError("small_x_approx: GPOE or GPUE only");
  }
}

}  // namespace rmtlab::curves
