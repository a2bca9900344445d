#include "fadm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fadm::oracles {

GaussRule gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {

// Composite Gauss-Legendre of g over [a, b], graded toward both ends.
double graded_quadrature(const RealFunction& g, double a, double b, const QuadOptions& opt) {
  const GaussRule rule = gauss_legendre(opt.points);
  auto panel = [&](double lo, double hi) {
    double half = 0.5 * (hi - lo);
    double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double v = g(mid + half * rule.nodes[i]);
      if (!std::isfinite(v)) throw std::domain_error("quadrature: non-finite integrand sample");
      sum += rule.weights[i] * v;
    }
    return half * sum;
  };

  const double mid = 0.5 * (a + b);
  double total = 0.0;
  // Left half: panels [a + (mid-a) r^{j+1}, a + (mid-a) r^j].
  double len = mid - a;
  double outer = mid;
  for (int j = 0; j < opt.levels; ++j) {
    double inner = a + len * std::pow(opt.ratio, j + 1);
    total += panel(inner, outer);
    outer = inner;
  }
  total += panel(a, outer);
  // Right half, mirrored.
  len = b - mid;
  outer = mid;
  for (int j = 0; j < opt.levels; ++j) {
    double inner = b - len * std::pow(opt.ratio, j + 1);
    total += panel(outer, inner);
    outer = inner;
  }
  total += panel(outer, b);
  return total;
}

}  // namespace

OracleReport quad_jumarie_integral(const RealFunction& f, double alpha, double t,
                                   const QuadOptions& options) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("quad_jumarie_integral: alpha must lie in (0, 1]");
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("quad_jumarie_integral: t must be positive");

  const double inv_alpha = 1.0 / alpha;
  RealFunction g = [&](double u) {
    double tau = t - std::pow(u, inv_alpha);
    return f(std::max(tau, 0.0));
  };
  const double upper = std::pow(t, alpha);
  // Independent of the library Gamma: the oracle uses the C library's tgamma.
  const double scale = 1.0 / std::tgamma(1.0 + alpha);

  QuadOptions fine = options;
  fine.levels = options.levels + 10;
  fine.points = options.points + 8;
  const double coarse_value = scale * graded_quadrature(g, 0.0, upper, options);
  const double fine_value = scale * graded_quadrature(g, 0.0, upper, fine);

  OracleReport report;
  report.value = fine_value;
  report.est_error = std::abs(fine_value - coarse_value);
  report.method = "graded Gauss-Legendre after u=(t-tau)^alpha";
  report.parameters = {{"alpha", alpha},
                       {"t", t},
                       {"levels", static_cast<double>(fine.levels)},
                       {"points", static_cast<double>(fine.points)},
                       {"ratio", options.ratio}};
  return report;
}

std::vector<double> gl_weights(double alpha, std::size_t count) {
  std::vector<double> w(count);
  if (count == 0) return w;
  w[0] = 1.0;
  for (std::size_t k = 1; k < count; ++k) {
    w[k] = w[k - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(k));
  }
  return w;
}

namespace {

double gl_sum(const RealFunction& f, double f0, double alpha, double x, double h, long max_terms) {
  const long support = static_cast<long>(std::floor(x / h + alpha));
  const long last = std::min(support, max_terms);
  double sum = 0.0;
  double w = 1.0;
  for (long k = 0; k <= last; ++k) {
    if (k > 0) w *= 1.0 - (alpha + 1.0) / static_cast<double>(k);
    const double s = x + (alpha - static_cast<double>(k)) * h;
    if (s < 0.0) break;
    sum += w * (f(s) - f0);
  }
  return sum / std::pow(h, alpha);
}

}  // namespace

OracleReport gl_derivative(const RealFunction& f, double alpha, double x, double h,
                           long max_terms) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("gl_derivative: alpha must lie in (0, 1]");
  if (!(h > 0.0)) throw std::domain_error("gl_derivative: h must be positive");
  if (x < alpha * h) throw std::domain_error("gl_derivative: x must be at least alpha*h");

  const double f0 = f(0.0);
  const double coarse = gl_sum(f, f0, alpha, x, h, max_terms);
  const double fine = gl_sum(f, f0, alpha, x, 0.5 * h, max_terms);

  OracleReport report;
  report.value = 2.0 * fine - coarse;
  report.est_error = std::abs(fine - coarse);
  report.method = "truncated fractional difference sum, Richardson h, h/2";
  report.parameters = {{"alpha", alpha}, {"x", x}, {"h", h},
                       {"terms", std::floor(x / (0.5 * h) + alpha) + 1.0}};
  return report;
}

namespace {

struct Rk4Run {
  std::vector<double> t;
  std::vector<double> y;
  bool blew_up = false;
};

constexpr double kBlowUp = 1e150;

Rk4Run integrate(const Rk4Problem& p, std::span<const double> times, double max_step) {
  const std::size_t order = p.init.size();
  std::vector<double> state = p.init;
  std::vector<double> k1(order), k2(order), k3(order), k4(order), tmp(order);

  auto rhs = [&](double t, const std::vector<double>& u, std::vector<double>& du) {
    for (std::size_t i = 0; i + 1 < order; ++i) du[i] = u[i + 1];
    du[order - 1] = p.nonlinearity.apply(u[0]) + p.forcing(t);
  };
  auto finite = [](const std::vector<double>& u) {
    return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v) && std::abs(v) < kBlowUp; });
  };

  Rk4Run run;
  double t = 0.0;
  for (double target : times) {
    const double span = target - t;
    const long steps = span > 0.0 ? static_cast<long>(std::ceil(span / max_step - 1e-9)) : 0;
    const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    for (long s = 0; s < steps; ++s) {
      rhs(t, state, k1);
      for (std::size_t i = 0; i < order; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
      rhs(t + 0.5 * h, tmp, k2);
      for (std::size_t i = 0; i < order; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
      rhs(t + 0.5 * h, tmp, k3);
      for (std::size_t i = 0; i < order; ++i) tmp[i] = state[i] + h * k3[i];
      rhs(t + h, tmp, k4);
      for (std::size_t i = 0; i < order; ++i) {
        state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      }
      t = s + 1 == steps ? target : t + h;
      if (!finite(state)) {
        run.blew_up = true;
        return run;
      }
    }
    t = target;
    run.t.push_back(target);
    run.y.push_back(state[0]);
  }
  return run;
}

}  // namespace

Rk4Table rk4_solve(const Rk4Problem& problem, std::span<const double> times, double max_step) {
  if (problem.init.empty()) throw std::invalid_argument("rk4_solve: need at least one initial value");
  if (!(max_step > 0.0)) throw std::invalid_argument("rk4_solve: step must be positive");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
      throw std::invalid_argument("rk4_solve: output times must be sorted and nonnegative");
    }
  }
  Rk4Run coarse = integrate(problem, times, max_step);
  Rk4Run fine = integrate(problem, times, 0.5 * max_step);

  Rk4Table table;
  table.t = std::move(coarse.t);
  table.y = std::move(coarse.y);
  table.blew_up = coarse.blew_up || fine.blew_up;
  table.step = max_step;
  const std::size_t common = std::min(table.y.size(), fine.y.size());
  table.t.resize(common);
  table.y.resize(common);
  for (std::size_t i = 0; i < common; ++i) {
    table.est_error = std::max(table.est_error, std::abs(table.y[i] - fine.y[i]));
  }
  return table;
}

Rk4Table rk4_solve(const Rk4Problem& problem, double t_end, double step) {
  if (!(step > 0.0) || t_end < 0.0) throw std::invalid_argument("rk4_solve: bad step or end time");
  const long steps = static_cast<long>(std::llround(t_end / step));
  std::vector<double> times;
  times.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) times.push_back(std::min(t_end, static_cast<double>(i) * step));
  if (times.back() < t_end) times.push_back(t_end);
  return rk4_solve(problem, times, step);
}

std::vector<Rational> taylor_oracle(const PolyNonlinearity& n, const Rational& f0,
                                    std::span<const Rational> init, int depth) {
  if (init.empty()) throw std::invalid_argument("taylor_oracle: need at least one initial value");
  if (depth < 0) throw std::invalid_argument("taylor_oracle: depth must be >= 0");
  const int order = static_cast<int>(init.size());
  std::vector<Rational> c(depth + 1);
  for (int i = 0; i < order && i <= depth; ++i) {
    // y^(i)(0) = i! c_i
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(i));
    c[i] = init[i] / Rational(fact);
  }

  const int max_power = n.degree();
  // powers[j][k] = [y^j]_k, grown one index per step.
  std::vector<std::vector<Rational>> powers(max_power + 1);
  for (int k = 0; k + order <= depth; ++k) {
    powers[0].push_back(k == 0 ? Rational(1) : Rational(0));
    for (int j = 1; j <= max_power; ++j) {
      Rational sum;
      for (int i = 0; i <= k; ++i) sum += powers[j - 1][i] * c[k - i];
      powers[j].push_back(sum);
    }
    Rational nk;
    for (const auto& [j, cj] : n.coeffs()) nk += cj * powers[j][k];
    if (k == 0) nk += f0;
    // k!/(k+n)! = 1/((k+1)(k+2)...(k+n))
    mpz_class rising = 1;
    for (int i = 1; i <= order; ++i) rising *= k + i;
    c[k + order] = nk / Rational(rising);
  }
  return c;
}

}  // namespace fadm::oracles
