#include "rmtlab/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace rmtlab::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// sin(pi x) with the argument reduced exactly before scaling by pi.
double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

}  // namespace

LogGamma ln_gamma(double x) {
  if (std::isnan(x)) {
    throw DomainError("ln_gamma: NaN argument");
  }
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("ln_gamma: pole at nonpositive integer " + std::to_string(x));
  }
  if (x >= 0.5) {
    return {log_gamma_lanczos(x), 1};
  }
  // Γ(x) Γ(1 - x) = π / sin(πx)
  const double s = sin_pi(x);
  const double log_abs = std::log(kPi) - std::log(std::abs(s)) - log_gamma_lanczos(1.0 - x);
  return {log_abs, s < 0.0 ? -1 : 1};
}

double gamma(double x) {
  const LogGamma lg = ln_gamma(x);
  return lg.sign * std::exp(lg.log_abs);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw DomainError("gamma_q: requires a > 0 and x >= 0");
  }
  if (x == 0.0) {
    return 1.0;
  }
  const double log_prefactor = -x + a * std::log(x) - ln_gamma(a).log_abs;
  if (x < a + 1.0) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < 10000; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * kEpsilon) {
        break;
      }
    }
    return 1.0 - sum * std::exp(log_prefactor);
  }
  // Lentz continued fraction.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) {
      break;
    }
  }
  return std::exp(log_prefactor) * h;
}

double bessel_k0(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k0: requires x > 0");
  }
  if (x <= 2.0) {
    const double q = 0.25 * x * x;
    double term = 1.0;  // (x²/4)^k / (k!)²
    double harmonic = 0.0;
    double i0 = 1.0;
    double tail = 0.0;
    for (int k = 1; k < 60; ++k) {
      term *= q / (static_cast<double>(k) * k);
      harmonic += 1.0 / k;
      i0 += term;
      tail += harmonic * term;
      if (term < kEpsilon * kEpsilon) {
        break;
      }
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
  }
  if (x > 745.0) {
    return 0.0;
  }
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEpsilon) {
      break;
    }
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
}

namespace {

constexpr double kErfSplit = 2.0;

// erf for 0 <= x < kErfSplit.
double erf_series(double x) {
  const double two_x2 = 2.0 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= two_x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * kEpsilon) {
      break;
    }
  }
  return 2.0 / std::sqrt(kPi) * x * std::exp(-x * x) * sum;
}

// exp(x²) erfc(x) for x >= kErfSplit.
double erfcx_fraction(double x) {
  // x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...)))
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double an = 0.5 * n;
    d = x + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) {
      break;
    }
  }
  return 1.0 / (std::sqrt(kPi) * f);
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) {
    return x;
  }
  if (x < 0.0) {
    return 2.0 - erfc(-x);
  }
  if (x < kErfSplit) {
    return 1.0 - erf_series(x);
  }
  if (x > 27.3) {
    return 0.0;
  }
  return std::exp(-x * x) * erfcx_fraction(x);
}

double erf(double x) {
  if (std::isnan(x)) {
    return x;
  }
  if (x < 0.0) {
    return -erf(-x);
  }
  if (x < kErfSplit) {
    return erf_series(x);
  }
  return 1.0 - erfc(x);
}

double erfcx(double x) {
  if (x >= kErfSplit) {
    return erfcx_fraction(x);
  }
  return std::exp(x * x) * erfc(x);
}

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadratureSpec: tolerances must be strictly positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  }
}

namespace {

// Kronrod 15-point nodes (descending, last is the centre) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

template <typename F>
Segment gauss_kronrod15(const F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    kronrod += kWgk[j] * (f1[j] + f2[j]);
    abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * (f1[j] + f2[j]);
    }
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double value = kronrod * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEpsilon)) {
    error = std::max(50.0 * kEpsilon * resabs, error);
  }
  return {lo, hi, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval domain,
                           const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(domain.lo) || std::isnan(domain.hi) || domain.hi < domain.lo) {
    throw DomainError("integrate: domain must be [lo, hi] with finite lo <= hi");
  }
  if (domain.hi == domain.lo) {
    return {0.0, 0.0, 0};
  }

  std::function<double(double)> g;
  double lo = domain.lo;
  double hi = domain.hi;
  if (std::isinf(domain.hi)) {
    g = [&f, origin = domain.lo](double u) {
      const double w = 1.0 - u;
      return f(origin + u / w) / (w * w);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
  }

  const auto by_error = [](const Segment& a, const Segment& b) { return a.error < b.error; };
  std::vector<Segment> heap;
  heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 1);
  heap.push_back(gauss_kronrod15(g, lo, hi));
  double total = heap.front().value;
  double total_error = heap.front().error;

  int subdivisions = 1;
  auto converged = [&] {
    return total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };
  while (!converged()) {
    if (subdivisions >= spec.max_subdivisions) {
      throw QuadratureError("integrate: no convergence within max_subdivisions",
                            {total, total_error, subdivisions});
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw QuadratureError("integrate: interval cannot be bisected further",
                            {total, total_error, subdivisions});
    }
    const Segment left = gauss_kronrod15(g, worst.lo, mid);
    const Segment right = gauss_kronrod15(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++subdivisions;
  }
  if (!std::isfinite(total)) {
    throw QuadratureError("integrate: non-finite integrand", {total, total_error, subdivisions});
  }
  // Re-sum to shed drift from the incremental updates.
  double value = 0.0;
  double error = 0.0;
  for (const Segment& s : heap) {
    value += s.value;
    error += s.error;
  }
  return {value, error, subdivisions};
}

}  // namespace rmtlab::specfun
