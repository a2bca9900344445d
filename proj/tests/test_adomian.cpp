#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fadm/adomian.hpp"
#include "test_support.hpp"

using namespace fadm;
using fadm::testing::random_series;

namespace {

const PolyNonlinearity kSquare = PolyNonlinearity::parse("1*y^2");

FracSeries section4_y0() {
  return FracSeries::monomial(1, GammaCoefficient::gamma_power(1, -1)) +
         FracSeries::monomial(2, GammaCoefficient::gamma_power(2, -1));
}

}  // namespace

TEST_CASE("power-term grammar") {
  CHECK(PolyNonlinearity::parse("1*y^2").coeffs() == std::map<int, Rational>{{2, 1}});
  CHECK(PolyNonlinearity::parse("y^2 + 2*y").coeffs() == std::map<int, Rational>{{1, 2}, {2, 1}});
  CHECK(PolyNonlinearity::parse(" -3 + 0.5*y^3 - y ").coeffs() ==
        std::map<int, Rational>{{0, -3}, {1, -1}, {3, Rational(1, 2)}});
  CHECK(PolyNonlinearity::parse("y^2 - y^2").is_empty());
  CHECK(PolyNonlinearity::parse("").is_empty());
  CHECK(PolyNonlinearity::parse("1e-3*y^2").coeffs().at(2) == Rational(1, 1000));
  CHECK_THROWS_AS(PolyNonlinearity::parse("y^"), std::invalid_argument);
  CHECK_THROWS_AS(PolyNonlinearity::parse("2y"), std::invalid_argument);
  CHECK_THROWS_AS(PolyNonlinearity::parse("y^-1"), std::invalid_argument);
  CHECK_THROWS_AS(PolyNonlinearity::parse("y*y"), std::invalid_argument);
  CHECK_THROWS_AS(PolyNonlinearity::parse("y^2 +"), std::invalid_argument);
  CHECK(to_string(PolyNonlinearity::parse("y^2 + 2*y - 1/3")) == "-1/3 + 2*y + 1*y^2");
}

TEST_CASE("degenerate (linear) nonlinearities are flagged") {
  CHECK(PolyNonlinearity{}.is_degenerate());
  CHECK(PolyNonlinearity::parse("3*y").is_degenerate());
  CHECK(!kSquare.is_degenerate());
  CHECK(PolyNonlinearity::parse("y^3").derivative() == PolyNonlinearity::parse("3*y^2"));
}

TEST_CASE("adomian_polynomials for y^2 match the listed forms") {
  std::mt19937 rng(1);
  const auto y0 = section4_y0();
  const auto y1 = random_series(rng, 3);
  const auto y2 = random_series(rng, 3);
  const std::vector<FracSeries> ys{y0, y1, y2};

  const auto seq = adomian_polynomials(kSquare, ys, 2);
  REQUIRE(seq.polys.size() == 3);
  CHECK(seq.source.size() == 3);
  CHECK(seq.polys[0] == y0 * y0);
  CHECK(seq.polys[1] == y0 * y1 * Rational(2));
  CHECK(seq.polys[2] == y0 * y2 * Rational(2) + y1 * y1);
}

TEST_CASE("A0 for the worked problem has the three printed terms") {
  const std::vector<FracSeries> ys{section4_y0()};
  const auto a0 = adomian_polynomials(kSquare, ys, 0).polys[0];
  CHECK(a0.terms().size() == 3);
  CHECK(a0.lowest_grade() == 2);
  CHECK(a0.coefficient(2) == GammaCoefficient::gamma_power(1, -2));
  CHECK(a0.coefficient(3) ==
        GammaCoefficient::from_atoms({{Rational(2), {{1, -1}, {2, -1}}}}));
  CHECK(a0.coefficient(4) == GammaCoefficient::gamma_power(2, -2));
}

TEST_CASE("adomian_polynomials: preconditions and linear N") {
  const std::vector<FracSeries> ys{section4_y0()};
  CHECK_THROWS_AS(adomian_polynomials(kSquare, ys, 1), std::invalid_argument);
  const auto linear = PolyNonlinearity::parse("3*y");
  std::mt19937 rng(2);
  const std::vector<FracSeries> more{random_series(rng, 3), random_series(rng, 3), random_series(rng, 3)};
  const auto seq = adomian_polynomials(linear, more, 2);
  for (int n = 0; n <= 2; ++n) CHECK(seq.polys[n] == more[n] * Rational(3));
  const auto none = adomian_polynomials(PolyNonlinearity{}, more, 2);
  for (const auto& a : none.polys) CHECK(a.is_zero());
}

TEST_CASE("constant term of N enters A0 only") {
  std::mt19937 rng(4);
  const std::vector<FracSeries> ys{random_series(rng, 3), random_series(rng, 3)};
  const auto n = PolyNonlinearity::parse("5 + y^2");
  const auto seq = adomian_polynomials(n, ys, 1);
  CHECK(seq.polys[0] == ys[0] * ys[0] + FracSeries::constant(GammaCoefficient(5)));
  CHECK(seq.polys[1] == ys[0] * ys[1] * Rational(2));
}

TEST_CASE("sum identity: A0 + A1 = (y0 + y1)^2 - y1^2") {
  std::mt19937 rng(6);
  for (int i = 0; i < 20; ++i) {
    const std::vector<FracSeries> ys{random_series(rng, 3), random_series(rng, 3)};
    const auto seq = adomian_polynomials(kSquare, ys, 1);
    const auto lhs = seq.polys[0] + seq.polys[1];
    const auto sum = ys[0] + ys[1];
    CHECK(lhs == sum * sum - ys[1] * ys[1]);
  }
}

TEST_CASE("prefix stability") {
  std::mt19937 rng(8);
  const auto cubic = PolyNonlinearity::parse("y^3 + 2*y");
  std::vector<FracSeries> ys;
  for (int i = 0; i < 4; ++i) ys.push_back(random_series(rng, 2));
  const auto short_seq = adomian_polynomials(cubic, ys, 2);
  const auto long_seq = adomian_polynomials(cubic, ys, 3);
  for (int n = 0; n <= 2; ++n) CHECK(short_seq.polys[n] == long_seq.polys[n]);
}

TEST_CASE("adomian_closed_form") {
  std::mt19937 rng(10);
  const auto y0 = section4_y0();
  CHECK(adomian_closed_form(kSquare, std::vector<FracSeries>{y0}, 0) == kSquare.apply(y0));
  const std::vector<FracSeries> with_zero{y0, FracSeries{}};
  CHECK(adomian_closed_form(kSquare, with_zero, 1).is_zero());
  std::vector<FracSeries> five(5, y0);
  CHECK_THROWS_AS(adomian_closed_form(kSquare, five, 4), std::out_of_range);
  CHECK_THROWS_AS(adomian_closed_form(kSquare, with_zero, 2), std::invalid_argument);
}

TEST_CASE("closed forms equal the lambda expansion for n <= 3") {
  std::mt19937 rng(12);
  for (const char* text : {"y^2", "y^3", "y^2 + 2*y", "y^4 - 1/2*y^2 + 3"}) {
    const auto n = PolyNonlinearity::parse(text);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FracSeries> ys;
      for (int i = 0; i < 4; ++i) ys.push_back(random_series(rng, 2));
      const auto seq = adomian_polynomials(n, ys, 3);
      for (int order = 0; order <= 3; ++order) {
        CHECK_MESSAGE(seq.polys[order] == adomian_closed_form(n, ys, order), text, " n=", order);
      }
    }
  }
}
