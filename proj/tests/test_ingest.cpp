#include <cmath>
#include <random>

#include "doctest.h"
#include "rmtlab/ingest.hpp"

using namespace rmtlab;
using namespace rmtlab::ingest;

namespace {

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

// Lag-1 autocovariance of the deviations from unit spacing.
double lag1_deviation_covariance(const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (v[i] - 1.0) * (v[i + 1] - 1.0);
  return s / (v.size() - 1);
}

SpectrumFile levels_of(std::vector<double> levels) {
  SpectrumFile s;
  s.levels = std::move(levels);
  s.source_label = "synthetic";
  return s;
}

}  // namespace

TEST_CASE("parse the first zeta-zero ordinates") {
  const auto s = parse_levels("14.13\n21.02\n30.42\n37.58\n");
  CHECK(s.levels == std::vector<double>{14.13, 21.02, 30.42, 37.58});
  CHECK(s.warnings.empty());
}

TEST_CASE("parse comments, blanks, CRLF and signs") {
  const auto s = parse_levels("# comment\n1\n\n  2  \r\n  # another\n+3\n", "f.txt");
  CHECK(s.levels == std::vector<double>{1, 2, 3});
  CHECK(s.source_label == "f.txt");
  CHECK(parse_levels("-2\n-1e0\n5.5e-1").levels == std::vector<double>{-2, -1, 0.55});
}

TEST_CASE("parse errors") {
  try {
    parse_levels("1\nabc\n", "bad.txt");
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(std::string(e.what()).find("bad.txt:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_levels("1 2\n3\n4\n"), IngestError);
  CHECK_THROWS_AS(parse_levels("# nothing\n\n"), IngestError);
  CHECK_THROWS_AS(parse_levels("1\n2\n"), IngestError);
  CHECK_THROWS_AS(parse_levels("1\n2\n2\n"), IngestError);
  CHECK_THROWS_AS(parse_levels("1\ninf\n3\n4\n"), IngestError);
  CHECK_THROWS_AS(read_levels("/nonexistent/levels.txt"), IngestError);
}

TEST_CASE("unsorted and duplicate input is repaired with warnings") {
  const auto s = parse_levels("3\n1\n2\n2\n5\n");
  CHECK(s.levels == std::vector<double>{1, 2, 3, 5});
  CHECK(s.warnings.size() == 2);
}

TEST_CASE("serialize and parse round trip exactly") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<double> v(2000);
  for (auto& x : v) x = u(gen);
  std::sort(v.begin(), v.end());
  v.push_back(1e300);
  const auto s = levels_of(v);
  const auto back = parse_levels(serialize_levels(s));
  CHECK(back.levels == s.levels);
  CHECK(serialize_levels(back) == serialize_levels(s));
}

TEST_CASE("unfold method syntax") {
  CHECK(std::holds_alternative<GlobalMean>(parse_unfold_method("global")));
  CHECK(std::get<LocalWindow>(parse_unfold_method("local:51")).width == 51);
  CHECK(std::get<PolynomialStaircase>(parse_unfold_method("poly:3")).degree == 3);
  CHECK(describe(parse_unfold_method("local:7")) == "local:7");
  CHECK_THROWS_AS(parse_unfold_method("local:4"), IngestError);
  CHECK_THROWS_AS(parse_unfold_method("local:x"), IngestError);
  CHECK_THROWS_AS(parse_unfold_method("poly:0"), IngestError);
  CHECK_THROWS_AS(parse_unfold_method("poly:10"), IngestError);
  CHECK_THROWS_AS(parse_unfold_method("spline"), IngestError);
}

TEST_CASE("arithmetic progression unfolds to unit spacings") {
  std::vector<double> v;
  for (int i = 1; i <= 100; ++i) v.push_back(i);
  for (const UnfoldMethod& m : {UnfoldMethod{GlobalMean{}}, UnfoldMethod{LocalWindow{11}},
                                UnfoldMethod{PolynomialStaircase{1}}}) {
    const auto s = unfold(levels_of(v), m);
    CHECK(s.size() == 99);
    for (double x : s.normalized) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("minimum size spectrum") {
  const auto s = levels_of({0.0, 1.0, 3.0});
  CHECK(unfold(s, GlobalMean{}).size() == 2);
  CHECK(unfold(s, LocalWindow{1}).size() == 2);
  CHECK_THROWS_AS(unfold(s, LocalWindow{3}), IngestError);
  CHECK(unfold(s, PolynomialStaircase{1}).size() == 2);
  CHECK_THROWS_AS(unfold(s, PolynomialStaircase{3}), IngestError);
  CHECK_THROWS_AS(unfold(levels_of({1.0, 2.0}), GlobalMean{}), IngestError);
}

TEST_CASE("local window removes a smooth trend") {
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(i + 0.01 * i * i);
  const auto global = unfold(levels_of(v), GlobalMean{});
  const auto local = unfold(levels_of(v), LocalWindow{51});
  CHECK(std::abs(mean(local.normalized) - 1.0) < 1e-12);
  CHECK(lag1_deviation_covariance(local.normalized) <
        0.01 * lag1_deviation_covariance(global.normalized));
}

TEST_CASE("unfolded output has unit mean and affine invariance") {
  std::mt19937_64 gen(5);
  std::exponential_distribution<double> gap(1.0);
  std::vector<double> v;
  double e = 0.0;
  for (int i = 0; i < 3000; ++i) {
    e += gap(gen) * (1.0 + 0.0003 * i);
    v.push_back(e);
  }
  std::vector<double> w;
  for (double x : v) w.push_back(4.5 * x - 17.0);
  for (const UnfoldMethod& m : {UnfoldMethod{GlobalMean{}}, UnfoldMethod{LocalWindow{51}},
                                UnfoldMethod{PolynomialStaircase{3}}}) {
    const auto a = unfold(levels_of(v), m);
    const auto b = unfold(levels_of(w), m);
    CHECK(std::abs(mean(a.normalized) - 1.0) < 1e-12);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a.normalized[i] - b.normalized[i]));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("polynomial staircase on smooth levels") {
  std::vector<double> v;
  for (int i = 0; i < 100; ++i) v.push_back(std::sqrt(1.0 + i));
  const auto s = unfold(levels_of(v), PolynomialStaircase{3});
  CHECK(s.size() == 99);
  CHECK(std::abs(mean(s.normalized) - 1.0) < 1e-12);
}
