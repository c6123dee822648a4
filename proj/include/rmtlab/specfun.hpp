#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

// Special functions and adaptive quadrature used to evaluate, normalize and
// integrate the analytic spacing distributions. Everything here is a pure
// function of its arguments.
namespace rmtlab::specfun {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ln|Γ(x)| with the sign of Γ(x) carried separately.
struct LogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

/// Lanczos approximation for x >= 1/2, reflection formula below that.
/// Accuracy is relative on Γ itself (absolute on the log), better than 1e-13
/// for |x| <= 50. Throws DomainError at the poles x = 0, -1, -2, ...
LogGamma ln_gamma(double x);

/// Γ(x) = sign * exp(log_abs). Overflows to ±inf past x ~ 171.
double gamma(double x);

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x) / Γ(a).
double gamma_q(double a, double x);

/// Modified Bessel function of the second kind, order zero.
///
/// x <= 2: ascending series  K0 = -(ln(x/2) + γ) I0(x) + Σ H_k (x²/4)^k / (k!)².
/// x >  2: Steed's continued fraction for K0 (Temme's CF2 at order zero).
/// Relative accuracy ~1e-15 on [1e-8, 700]; underflows to 0 beyond x ~ 745.
double bessel_k0(double x);

/// Complementary error function.
///
/// |x| < 2: erfc = 1 - erf, erf from the all-positive Kummer series.
/// |x| >= 2: Lentz evaluation of the Laplace continued fraction.
/// Negative arguments use erfc(-x) = 2 - erfc(x).
double erfc(double x);
double erf(double x);

/// Scaled complementary error function exp(x²) erfc(x), overflow-free for
/// large positive x.
double erfcx(double x);

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const;
};

/// Integration domain [lo, hi]; hi may be +infinity.
struct Interval {
  double lo;
  double hi;

  static Interval to_infinity(double lo) {
    return {lo, std::numeric_limits<double>::infinity()};
  }
};

struct QuadratureResult {
  double value;
  double abs_error;
  int subdivisions;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature with bisection of the
/// worst interval. Semi-infinite ranges are mapped onto [0, 1) by
/// t = lo + u / (1 - u), dt = du / (1 - u)². Integrable endpoint singularities
/// (K0's logarithm at zero) are handled because Kronrod nodes never touch the
/// endpoints. Throws QuadratureError carrying the best estimate when the
/// tolerance is not met within max_subdivisions.
QuadratureResult integrate(const std::function<double(double)>& f,
                           Interval domain, const QuadratureSpec& spec = {});

}  // namespace rmtlab::specfun
