#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fadm/config.hpp"

using namespace fadm;

namespace {

const std::string kSection4 = R"(# worked problem
[problem]
n = 2
alpha = 0.9
N = "1*y^2"   # square
f = 1
init = [0, 1]

[run]
iterations = 2
max_grade = 10
t_start = 0
t_end = 0.8
points = 9
alphas = [0.9, 0.99]

[output]
dir = "results"
)";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

ConfigError error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError");
  return ConfigError(0, "", "");
}

}  // namespace

TEST_CASE("parses the worked-problem configuration") {
  const auto cfg = parse_config(kSection4);
  CHECK(cfg.problem.n == 2);
  CHECK(cfg.problem.alpha == 0.9);
  CHECK(cfg.problem.nonlinearity == PolyNonlinearity::parse("y^2"));
  CHECK(cfg.problem.forcing == FracSeries::constant(GammaCoefficient(1), 10));
  CHECK(cfg.problem.init == std::vector<Rational>{0, 1});
  CHECK(cfg.problem.max_grade == 10);
  CHECK(cfg.iterations == 2);
  CHECK(cfg.t_end == 0.8);
  CHECK(cfg.points == 9);
  CHECK(cfg.alphas == std::vector<double>{0.9, 0.99});
  CHECK(cfg.out_dir == "results");
}

TEST_CASE("forcing as grade/coefficient pairs, read exactly") {
  const auto cfg = parse_config(replace(kSection4, "f = 1", "f = [[0, 0.1], [2, -3/4]]"));
  CHECK(cfg.problem.forcing.coefficient(0) == GammaCoefficient(Rational(1, 10)));
  CHECK(cfg.problem.forcing.coefficient(2) == GammaCoefficient(Rational(-3, 4)));
}

TEST_CASE("defaults") {
  const auto cfg = parse_config("[problem]\nn = 1\ninit = [0]\n");
  CHECK(cfg.problem.nonlinearity.is_empty());
  CHECK(cfg.problem.forcing.is_zero());
  CHECK(cfg.iterations == 1);
  CHECK(cfg.points == 101);
  CHECK(cfg.problem.max_grade == kDefaultMaxGrade);
}

TEST_CASE("grid with a single point is rejected") {
  const auto e = error_of(replace(kSection4, "points = 9", "points = 1"));
  CHECK(e.field() == "points");
}

TEST_CASE("invalid alpha and n have their own messages") {
  const auto a = error_of(replace(kSection4, "alpha = 0.9", "alpha = 1.5"));
  CHECK(a.field() == "alpha");
  CHECK(std::string(a.what()).find("alpha must lie in (0, 1]") != std::string::npos);

  const auto n = error_of(replace(kSection4, "n = 2", "n = 0"));
  CHECK(n.field() == "n");
  CHECK(n.line() == 3);
  CHECK(std::string(n.what()).find("n must be >= 1") != std::string::npos);

  const auto sweep = error_of(replace(kSection4, "alphas = [0.9, 0.99]", "alphas = [0.9, 0]"));
  CHECK(sweep.field() == "alphas");
}

TEST_CASE("malformed input reports line and field") {
  auto e = error_of(replace(kSection4, "iterations = 2", "iterations = two"));
  CHECK(e.line() == 10);
  CHECK(e.field() == "iterations");

  e = error_of(replace(kSection4, "N = \"1*y^2\"", "N = \"1*y^^2\""));
  CHECK(e.line() == 5);
  CHECK(e.field() == "N");

  e = error_of(replace(kSection4, "init = [0, 1]", "init = [0, 1"));
  CHECK(e.line() == 7);

  e = error_of(replace(kSection4, "[run]", "[runn]"));
  CHECK(e.line() == 9);

  e = error_of(replace(kSection4, "t_end = 0.8", "t_ned = 0.8"));
  CHECK(e.field() == "t_ned");

  e = error_of(replace(kSection4, "t_end = 0.8", "t_end 0.8"));
  CHECK(e.line() == 13);

  e = error_of(replace(kSection4, "init = [0, 1]", "init = [0]"));
  CHECK(e.field() == "problem");

  e = error_of("[problem]\nn = 2\n");
  CHECK(e.field() == "init");

  e = error_of("n = 2\n");
  CHECK(e.line() == 1);

  e = error_of(replace(kSection4, "f = 1", "f = [[20, 1]]"));
  CHECK(e.field() == "f");
}

TEST_CASE("load_config reports unreadable files") {
  CHECK_THROWS_AS(load_config("/nonexistent/problem.toml"), ConfigError);
}
