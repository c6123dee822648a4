#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "rmtlab/ensembles.hpp"
#include "rmtlab/verify.hpp"

using namespace rmtlab::ensembles;
using cd = std::complex<double>;

namespace {

const EnsembleKind kAllKinds[] = {EnsembleKind::goe(),     EnsembleKind::gue(),
                                  EnsembleKind::gse(),     EnsembleKind::gpoe(),
                                  EnsembleKind::gpue(),    EnsembleKind::qh3(0.7),
                                  EnsembleKind::qh4(0.3)};

RealPair real_pair(const EigenOutcome& o) {
  REQUIRE(std::holds_alternative<RealPair>(o));
  return std::get<RealPair>(o);
}

// Numerical eigenvalues sorted by real part, descending.
std::vector<cd> numeric_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h);
  std::vector<cd> ev(solver.eigenvalues().data(),
                     solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](cd a, cd b) { return a.real() > b.real(); });
  return ev;
}

}  // namespace

TEST_CASE("kind construction") {
  CHECK(EnsembleKind::goe().kappa() == std::nullopt);
  CHECK(EnsembleKind::qh4(0.5).kappa() == 0.5);
  CHECK_THROWS_AS(EnsembleKind::qh3(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleKind::of(Family::GOE, 0.2), std::invalid_argument);
  CHECK(EnsembleKind::parse_family("GpUe") == Family::GPUE);
  CHECK(EnsembleKind::parse_family("xyz") == std::nullopt);
  CHECK(EnsembleKind::gse().parameter_count() == 6);
  CHECK(EnsembleKind::qh3(1.0).parameter_count() == 3);
}

TEST_CASE("closed-form eigenvalue examples") {
  const auto gpoe = real_pair(eigenvalues(EnsembleKind::gpoe(), {0, 5, 3}));
  CHECK(gpoe.upper == 4.0);
  CHECK(gpoe.lower == -4.0);
  CHECK(std::holds_alternative<ComplexRejected>(eigenvalues(EnsembleKind::gpoe(), {1, 1, 2})));

  const auto gpue = real_pair(eigenvalues(EnsembleKind::gpue(), {0, 3, 2, 2}));
  CHECK(gpue.upper == 1.0);
  CHECK(gpue.lower == -1.0);
  const auto ev = numeric_eigenvalues(realize_matrix(EnsembleKind::gpue(), {0, 3, 2, 2}));
  CHECK(std::abs(ev[0] - cd(1.0)) < 1e-12);
  CHECK(std::abs(ev[1] - cd(-1.0)) < 1e-12);

  for (double kappa : {0.0, 0.4, 2.0}) {
    const auto qh3 = real_pair(eigenvalues(EnsembleKind::qh3(kappa), {0, 3, 4}));
    CHECK(qh3.upper == 5.0);
    CHECK(qh3.lower == -5.0);
  }
}

TEST_CASE("spacing of outcomes") {
  CHECK(spacing(RealPair{4, -4}) == 8.0);
  CHECK(spacing(RealPair{2, 2}) == 0.0);
  CHECK(spacing(ComplexRejected{}) == std::nullopt);
}

TEST_CASE("realized matrices match the defining forms") {
  const auto gpoe = realize_matrix(EnsembleKind::gpoe(), {0, 5, 3});
  CHECK(gpoe(0, 0) == cd(5));
  CHECK(gpoe(0, 1) == cd(0, 3));
  CHECK(gpoe(1, 0) == cd(0, 3));
  CHECK(gpoe(1, 1) == cd(-5));

  const ParamVector p{0.3, -1.1, 0.7, 2.5};
  const auto gue = realize_matrix(EnsembleKind::gue(), p);
  CHECK(gue(0, 0) == cd(p.a + p.b));
  CHECK(gue(0, 1) == cd(p.c, p.d));
  CHECK(gue(1, 0) == cd(p.c, -p.d));
  CHECK(gue(1, 1) == cd(p.a - p.b));

  const auto qh4 = realize_matrix(EnsembleKind::qh4(std::numbers::ln2), {0, 0, 3, 4});
  CHECK(std::abs(qh4(0, 1) - cd(3, 4) * 2.0) < 1e-14);
  CHECK(std::abs(qh4(1, 0) - cd(3, -4) / 2.0) < 1e-14);
  CHECK(qh4(0, 0) == cd(0));
  CHECK(qh4(1, 1) == cd(0));

  CHECK(realize_matrix(EnsembleKind::gse(), {1, 2, 3, 4, 5, 6}).rows() == 4);
}

TEST_CASE("numerical eigensolve agrees with closed forms for sampled matrices") {
  const SamplerConfig cfg{1.3, 11, 1};
  for (const auto& kind : kAllKinds) {
    int rejected = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const ParamVector p = draw_params(kind, cfg, i);
      const auto outcome = eigenvalues(kind, p);
      const auto ev = numeric_eigenvalues(realize_matrix(kind, p));
      if (std::holds_alternative<ComplexRejected>(outcome)) {
        ++rejected;
        CHECK(std::abs(ev[0].imag()) > 1e-9);
        continue;
      }
      const auto pair = std::get<RealPair>(outcome);
      CHECK(pair.upper >= pair.lower);
      // GSE: doubly degenerate, so ev = {E1, E1, E2, E2}.
      const cd top = ev.front();
      const cd bottom = ev.back();
      CHECK(std::abs(top - cd(pair.upper)) < 1e-8);
      CHECK(std::abs(bottom - cd(pair.lower)) < 1e-8);
    }
    const bool can_reject = kind.family() == Family::GPOE || kind.family() == Family::GPUE;
    CHECK((rejected > 0) == can_reject);
  }
}

TEST_CASE("rejection predicate is exact") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n01;
  for (int i = 0; i < 10000; ++i) {
    const ParamVector p3{n01(gen), n01(gen), n01(gen)};
    CHECK(std::holds_alternative<ComplexRejected>(eigenvalues(EnsembleKind::gpoe(), p3)) ==
          (p3.b * p3.b < p3.c * p3.c));
    const ParamVector p4{n01(gen), n01(gen), n01(gen), n01(gen)};
    CHECK(std::holds_alternative<ComplexRejected>(eigenvalues(EnsembleKind::gpue(), p4)) ==
          (p4.b * p4.b < p4.c * p4.c + p4.d * p4.d));
  }
  // Boundary b² = c² is real with zero spacing.
  CHECK(spacing(eigenvalues(EnsembleKind::gpoe(), {0, 2, 2})) == 0.0);
}

TEST_CASE("draw_params laws") {
  const SamplerConfig cfg{1.0, 5, 1};
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(draw_params(EnsembleKind::qh3(0.0), cfg, i) == draw_params(EnsembleKind::goe(), cfg, i));
    CHECK(draw_params(EnsembleKind::qh4(0.0), cfg, i) == draw_params(EnsembleKind::gue(), cfg, i));
    const auto gue = draw_params(EnsembleKind::gue(), cfg, i);
    CHECK(gue.e == 0.0);
    CHECK(gue.f == 0.0);
    CHECK_NOTHROW(validate(EnsembleKind::gue(), gue));
  }
  CHECK_THROWS_AS(validate(EnsembleKind::goe(), {1, 2, 3, 4}), std::invalid_argument);

  SUBCASE("GPOE variance is sigma^2/2") {
    const SamplerConfig c2{2.0, 9, 1};
    double sum[3] = {};
    double sq[3] = {};
    constexpr int n = 1000000;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto p = draw_params(EnsembleKind::gpoe(), c2, i);
      const double v[3] = {p.a, p.b, p.c};
      for (int k = 0; k < 3; ++k) {
        sum[k] += v[k];
        sq[k] += v[k] * v[k];
      }
    }
    for (int k = 0; k < 3; ++k) {
      const double mean = sum[k] / n;
      const double var = sq[k] / n - mean * mean;
      CHECK(std::abs(var / 2.0 - 1.0) < 0.01);
    }
  }

  SUBCASE("QH4 off-diagonal variance shrinks by cosh 2 kappa") {
    const double kappa = 0.5;
    const auto scales = parameter_scales(EnsembleKind::qh4(kappa), 1.0);
    CHECK(scales.a == doctest::Approx(std::sqrt(0.5)));
    CHECK(scales.b == doctest::Approx(std::sqrt(0.5)));
    CHECK(scales.c == doctest::Approx(std::sqrt(0.5 / std::cosh(1.0))));
    CHECK(scales.d == scales.c);
    const auto qh3 = parameter_scales(EnsembleKind::qh3(kappa), 1.0);
    CHECK(qh3.b == scales.c);
    CHECK(qh3.d == 0.0);
  }
}

TEST_CASE("spectral parameterization") {
  const auto p0 = spectral_to_params(Family::GPOE, {0, 2, 0});
  CHECK(p0 == ParamVector{0, 1, 0});
  const auto r0 = real_pair(eigenvalues(EnsembleKind::gpoe(), p0));
  CHECK(r0.upper == 1.0);
  CHECK(r0.lower == -1.0);

  CHECK(spectral_to_params(Family::GPUE, {0, 2, 0, 1.234}) == ParamVector{0, 1, 0, 0});

  const auto p1 = spectral_to_params(Family::GPOE, {2, 2, 0.5});
  CHECK(p1.b == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(p1.c == doctest::Approx(-std::sinh(1.0)).epsilon(1e-15));
  const auto r1 = real_pair(eigenvalues(EnsembleKind::gpoe(), p1));
  CHECK(std::abs(r1.upper - 2.0) < 1e-12);
  CHECK(std::abs(r1.lower) < 1e-12);

  CHECK_THROWS_AS(spectral_to_params(Family::GUE, {}), std::invalid_argument);
  CHECK_THROWS_AS(spectral_to_params(Family::GPOE, {0, -1, 0}), std::invalid_argument);
}

TEST_CASE("spectral round trip for random parameters") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> t(-3, 3), s(0, 3), theta(-1.5, 1.5),
      phi(0, 2 * std::numbers::pi);
  for (int i = 0; i < 1000; ++i) {
    const SpectralParams sp{t(gen), s(gen), theta(gen), phi(gen)};
    for (Family f : {Family::GPOE, Family::GPUE}) {
      const auto kind = EnsembleKind::of(f);
      const auto r = real_pair(eigenvalues(kind, spectral_to_params(f, sp)));
      const double tol = 1e-12;
      CHECK(std::abs(r.upper - 0.5 * (sp.t + sp.s)) <= tol);
      CHECK(std::abs(r.lower - 0.5 * (sp.t - sp.s)) <= tol);
    }
  }
}

TEST_CASE("finite-difference Jacobians are proportional to |s| and s^2 sinh 2theta") {
  using rmtlab::verify::jacobian_determinant_exact;
  using rmtlab::verify::jacobian_determinant_fd;
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> t(-2, 2), s(0.5, 3), theta(0.1, 1.5),
      phi(0, 2 * std::numbers::pi);
  for (int i = 0; i < 100; ++i) {
    const SpectralParams sp{t(gen), s(gen), theta(gen), phi(gen)};
    // Constants: 1/4 for GPOE, 1/2 for GPUE.
    CHECK(jacobian_determinant_fd(Family::GPOE, sp) / std::abs(sp.s) ==
          doctest::Approx(0.25).epsilon(1e-6));
    CHECK(jacobian_determinant_fd(Family::GPUE, sp) /
              (sp.s * sp.s / 4.0 * std::sinh(2.0 * sp.theta)) ==
          doctest::Approx(0.5).epsilon(1e-6));
    CHECK(jacobian_determinant_exact(Family::GPOE, sp) == doctest::Approx(std::abs(sp.s) / 4));
  }
}

TEST_CASE("QH3 eigenvalues are independent of kappa") {
  const SamplerConfig cfg{1.0, 2, 1};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ParamVector p = draw_params(EnsembleKind::goe(), cfg, i);
    const auto ref = real_pair(eigenvalues(EnsembleKind::qh3(0.0), p));
    for (double kappa : {0.25, 1.0, 3.0}) {
      const auto r = real_pair(eigenvalues(EnsembleKind::qh3(kappa), p));
      CHECK(r.upper == ref.upper);
      CHECK(r.lower == ref.lower);
    }
  }
}

TEST_CASE("pseudo-Hermiticity residuals") {
  const SamplerConfig cfg{1.0, 8, 1};
  for (const auto& kind : {EnsembleKind::gpoe(), EnsembleKind::gpue(), EnsembleKind::qh3(0.8),
                           EnsembleKind::qh4(1.5)}) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      CHECK(pseudo_hermiticity_residual(kind, draw_params(kind, cfg, i)) <= 1e-12);
    }
  }
  for (const auto& kind : {EnsembleKind::goe(), EnsembleKind::gue(), EnsembleKind::gse()}) {
    CHECK_THROWS_AS(pseudo_hermiticity_residual(kind, {}), std::invalid_argument);
    for (std::uint64_t i = 0; i < 100; ++i) {
      CHECK(hermiticity_residual(kind, draw_params(kind, cfg, i)) == 0.0);
    }
  }
  CHECK_THROWS_AS(hermiticity_residual(EnsembleKind::gpoe(), {}), std::invalid_argument);

  // Perturb c on one off-diagonal entry only: both off-diagonal entries of
  // η H η⁻¹ - H† then differ by 0.1 in magnitude.
  const ParamVector p{0.2, 1.5, 0.6};
  Eigen::MatrixXcd h = realize_matrix(EnsembleKind::gpoe(), p);
  h(0, 1) = cd(0, p.c + 0.1);
  CHECK(pseudo_hermiticity_residual(h, metric(EnsembleKind::gpoe())) ==
        doctest::Approx(0.1).epsilon(1e-12));
}
