#pragma once

#include <array>
#include <optional>
#include <string_view>

// Analytic nearest-neighbour spacing distributions, all normalized to unit
// area and unit mean:
//
//   GOE   (π/2) x exp(-πx²/4)
//   GUE   (32/π²) x² exp(-4x²/π)
//   GSE   (2¹⁸/3⁶π³) x⁴ exp(-64x²/9π)
//   GPOE  α x K0(β x²),              α = Γ⁴(-1/4)/(32π³), β = 2Γ⁴(3/4)/π²
//   GPUE  α x exp(β x²) erfc(γ x),   B = 2(√2 - ln(1+√2)) / (√π (√2 - 1)),
//                                     α = B²/(2(√2-1)), β = B²/4, γ = B/√2
namespace rmtlab::curves {

enum class CurveKind { GOE, GUE, GSE, GPOE, GPUE };

inline constexpr std::array<CurveKind, 5> kAllCurves = {
    CurveKind::GOE, CurveKind::GUE, CurveKind::GSE, CurveKind::GPOE, CurveKind::GPUE};

std::string_view curve_name(CurveKind kind);
/// Case-insensitive.
std::optional<CurveKind> parse_curve(std::string_view name);

struct CurveConstants {
  double alpha;
  double beta;
  double gamma;  // GPUE only, 0 otherwise
  double B;      // GPUE only, 0 otherwise
};

/// Constants evaluated from the closed forms (never from rounded decimals).
const CurveConstants& constants(CurveKind kind);

/// Throws specfun::DomainError for x < 0. pdf(kind, 0) = 0 for every kind.
double pdf(CurveKind kind, double x);

/// ∫₀ˣ pdf. Backed by a per-curve table of exact cell integrals on a
/// 4096-cell grid over [0, 8], plus one adaptive quadrature from the nearest
/// node below x (so there is no interpolation error). Tables are built once on
/// first use and are immutable afterwards.
double cdf(CurveKind kind, double x);

/// k-th moment ∫₀^∞ x^k pdf dx by adaptive quadrature, k in [0, 4].
double moment(CurveKind kind, int k);

/// Inverse CDF on (0, 1) by safeguarded Newton iteration.
double quantile(CurveKind kind, double p);

/// Printed small-spacing approximants, defined on 0 < x < 0.5:
///   GPOE  (0.5 - 1.2 ln x) x
///   GPUE  2.5 x (1 - 0.95 x)
/// Throws specfun::DomainError for other kinds or x outside (0, 0.5).
double small_x_approx(CurveKind kind, double x);

}  // namespace rmtlab::curves
