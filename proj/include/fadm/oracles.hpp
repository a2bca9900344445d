#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fadm/adomian.hpp"
#include "fadm/rational.hpp"

namespace fadm::oracles {

/// Numeric ground truth with an a-posteriori error estimate.
struct OracleReport {
  double value = 0.0;
  double est_error = 0.0;
  std::string method;
  std::map<std::string, double> parameters;
};

using RealFunction = std::function<double(double)>;

struct QuadOptions {
  int levels = 40;       // geometric grading depth toward each endpoint
  double ratio = 0.15;   // grading ratio between consecutive panels
  int points = 16;       // Gauss-Legendre nodes per panel
};

/// (1/Gamma(1+alpha)) * int_0^t f(tau) (d tau)^alpha, i.e.
/// (alpha/Gamma(1+alpha)) * int_0^t (t-tau)^(alpha-1) f(tau) d tau.
///
/// The kernel singularity is removed by u = (t-tau)^alpha, leaving
/// int_0^{t^alpha} f(t - u^(1/alpha)) du, which is integrated with composite
/// Gauss-Legendre on a mesh graded geometrically toward both endpoints.
/// est_error compares against a run with more levels and nodes.
/// Throws std::domain_error on non-finite samples or bad arguments.
OracleReport quad_jumarie_integral(const RealFunction& f, double alpha, double t,
                                   const QuadOptions& options = {});

/// Truncated difference-sum form of Jumarie's derivative,
///   sum_{k=0}^{K} (-1)^k C(alpha,k) g(x + (alpha-k) h) / h^alpha,
/// applied to g(s) = f(s) - f(0) for s >= 0 and g(s) = 0 for s < 0, so the
/// sum terminates at k = floor(x/h + alpha) and constants map to exactly 0.
/// `max_terms` caps K. The value is the Richardson combination of the h and
/// h/2 sums; est_error is |D(h) - D(h/2)|.
OracleReport gl_derivative(const RealFunction& f, double alpha, double x, double h,
                           long max_terms = 100'000'000);

/// (-1)^k C(alpha, k) for k = 0..count-1.
std::vector<double> gl_weights(double alpha, std::size_t count);

/// Classical IVP y^(n) = N(y) + f(t), y^(i)(0) = init[i], n = init.size().
struct Rk4Problem {
  PolyNonlinearity nonlinearity;
  RealFunction forcing = [](double) { return 0.0; };
  std::vector<double> init;
};

struct Rk4Table {
  std::vector<double> t;
  std::vector<double> y;
  /// The solution overflowed; the table ends at the last finite point.
  bool blew_up = false;
  /// max |y_h - y_{h/2}| over the reported points.
  double est_error = 0.0;
  double step = 0.0;
};

/// RK4 on the first-order system, reporting y at each of the sorted, nonnegative
/// `times`, with internal steps no longer than `max_step`.
Rk4Table rk4_solve(const Rk4Problem& problem, std::span<const double> times, double max_step);

/// Fixed-step table on [0, t_end].
Rk4Table rk4_solve(const Rk4Problem& problem, double t_end, double step);

/// Exact Taylor coefficients c_0..c_depth of the solution of
/// y^(n) = N(y) + f0, y^(i)(0) = init[i], from the power-series recurrence
/// c_{k+n} = ([N(y)]_k + f0 [k=0]) k!/(k+n)!.
std::vector<Rational> taylor_oracle(const PolyNonlinearity& n, const Rational& f0,
                                    std::span<const Rational> init, int depth);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

}  // namespace fadm::oracles
