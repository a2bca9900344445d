#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fadm/gamma.hpp"
#include "fadm/json_io.hpp"
#include "test_support.hpp"

using namespace fadm;
using fadm::testing::random_coefficient;

namespace {

GammaCoefficient inv_gamma(int k) { return GammaCoefficient::gamma_power(k, -1); }

GammaCoefficient atom(long num, long den, GammaFactors factors) {
  Rational q(num, den);
  q.canonicalize();
  return GammaCoefficient::from_atoms({GammaAtom{q, std::move(factors)}});
}

// Independent evaluation through the C library Gamma.
double reference_eval(const GammaCoefficient& c, double alpha) {
  long double total = 0;
  for (const auto& a : c.atoms()) {
    long double term = a.rational.get_d();
    for (const auto& f : a.factors) term *= std::pow(std::tgamma(1.0L + f.grade * alpha), f.exponent);
    total += term;
  }
  return static_cast<double>(total);
}

}  // namespace

TEST_CASE("gamma: special values") {
  CHECK(fadm::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fadm::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(fadm::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(fadm::gamma(1.5) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
}

TEST_CASE("gamma: domain errors") {
  CHECK_THROWS_AS(fadm::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(fadm::gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(fadm::gamma(std::nan("")), std::domain_error);
}

TEST_CASE("gamma: relative error under 1e-13 on (0, 50]") {
  double worst = 0.0;
  for (int i = 1; i <= 5000; ++i) {
    const double x = 50.0 * i / 5000.0;
    const long double ref = std::tgamma(static_cast<long double>(x));
    worst = std::max(worst, static_cast<double>(std::abs((fadm::gamma(x) - ref) / ref)));
  }
  for (double x : {1e-6, 1e-3, 0.1, 0.3, 0.49, 0.51}) {
    const long double ref = std::tgamma(static_cast<long double>(x));
    worst = std::max(worst, static_cast<double>(std::abs((fadm::gamma(x) - ref) / ref)));
  }
  MESSAGE("worst relative error ", worst);
  CHECK(worst <= 1e-13);
}

TEST_CASE("coeff_add: merge, identity, cancellation") {
  const auto c = inv_gamma(1);
  const auto sum = c + c;
  REQUIRE(sum.size() == 1);
  CHECK(sum.atoms()[0].rational == 2);
  CHECK(sum.atoms()[0].factors == GammaFactors{{1, -1}});
  CHECK(c + GammaCoefficient{} == c);
  CHECK((c + (-c)).is_zero());
  CHECK((c - c).is_zero());
}

TEST_CASE("coeff_mul: powers, identity, telescoping") {
  CHECK(inv_gamma(1) * inv_gamma(1) == GammaCoefficient::gamma_power(1, -2));
  const auto c = atom(3, 7, {{2, 1}, {5, -1}});
  CHECK(c * GammaCoefficient(1) == c);
  CHECK((c * GammaCoefficient{}).is_zero());

  const auto a = atom(1, 1, {{2, 1}, {3, -1}});
  const auto b = atom(1, 1, {{3, 1}, {4, -1}});
  const auto product = a * b;
  CHECK(product == atom(1, 1, {{2, 1}, {4, -1}}));
  const double alpha = 0.7;
  CHECK(evaluate(product, alpha) ==
        doctest::Approx(fadm::gamma(1 + 2 * alpha) / fadm::gamma(1 + 4 * alpha)).epsilon(1e-13));
}

TEST_CASE("coeff_eval: worked values") {
  CHECK(evaluate(inv_gamma(2), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  const auto c = atom(1, 1, {{1, -2}, {2, 1}, {4, -1}});
  CHECK(evaluate(c, 1.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(evaluate(GammaCoefficient{}, 0.4) == 0.0);
}

TEST_CASE("coeff_eval: relative error under 1e-12 for atoms up to eight factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> grade(1, 12), exp(-2, 2);
  std::uniform_real_distribution<double> alpha(0.05, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    GammaAtom a{Rational(3, 5), {}};
    for (int f = 0; f < 8; ++f) {
      int e = exp(rng);
      a.factors.push_back({grade(rng), e == 0 ? 1 : e});
    }
    const auto c = GammaCoefficient::from_atoms({a});
    const double x = alpha(rng);
    const double ref = reference_eval(c, x);
    CHECK(std::abs(evaluate(c, x) - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("canonical form: grade-0 absorbed, repeated grades merged, zero dropped") {
  const auto c = GammaCoefficient::from_atoms({
      GammaAtom{Rational(1), {{0, 3}, {2, 1}, {2, 1}, {1, -1}}},
      GammaAtom{Rational(2), {{1, -1}, {2, 2}}},
      GammaAtom{Rational(5), {{3, 1}, {3, -1}}},
      GammaAtom{Rational(-5), {}},
      GammaAtom{Rational(0), {{4, 1}}},
  });
  REQUIRE(c.size() == 1);
  CHECK(c.atoms()[0].rational == 3);
  CHECK(c.atoms()[0].factors == GammaFactors{{1, -1}, {2, 2}});
}

TEST_CASE("canonical form: re-canonicalization is a no-op") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_coefficient(rng) + random_coefficient(rng) * random_coefficient(rng);
    CHECK(c.canonicalized() == c);
    for (const auto& a : c.atoms()) {
      CHECK(a.rational != 0);
      for (std::size_t j = 0; j < a.factors.size(); ++j) {
        CHECK(a.factors[j].grade >= 1);
        CHECK(a.factors[j].exponent != 0);
        if (j > 0) CHECK(a.factors[j - 1].grade < a.factors[j].grade);
      }
    }
  }
}

TEST_CASE("ring axioms hold structurally and numerically") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> alpha(0.1, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_coefficient(rng);
    const auto b = random_coefficient(rng);
    const auto c = random_coefficient(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (int s = 0; s < 5; ++s) {
      const double x = alpha(rng);
      const double lhs = evaluate(a * (b + c), x);
      const double rhs = evaluate(a, x) * (evaluate(b, x) + evaluate(c, x));
      CHECK(testing::rel_diff(lhs, rhs) <= 1e-10);
      CHECK(testing::rel_diff(evaluate(a + b, x), evaluate(a, x) + evaluate(b, x)) <= 1e-10);
    }
  }
}

TEST_CASE("human-readable form lists numerator factors first") {
  const auto c = atom(2, 1, {{1, -1}, {2, -1}, {3, 1}, {5, -1}});
  CHECK(to_string(c) == "2/1 * G(1+3a)^1 * G(1+a)^-1 * G(1+2a)^-1 * G(1+5a)^-1");
  CHECK(to_string(GammaCoefficient{}) == "0");
  CHECK(to_string(GammaCoefficient(Rational(-1, 3))) == "-1/3");
}

TEST_CASE("JSON form round-trips, including integers beyond 64 bits") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_coefficient(rng) * random_coefficient(rng);
    CHECK(coefficient_from_json(to_json(c)) == c);
  }
  const Rational huge(mpz_class("123456789012345678901234567890"), mpz_class(7));
  const auto big = GammaCoefficient(huge) * inv_gamma(3);
  const auto j = to_json(big);
  CHECK(j[0]["rational"][0].is_string());
  CHECK(j[0]["factors"] == nlohmann::json::array({nlohmann::json::array({3, -1})}));
  CHECK(coefficient_from_json(j) == big);
}

TEST_CASE("parse_rational reads decimals exactly") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
