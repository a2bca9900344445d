#include "fadm/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace fadm::kernels {

namespace {

struct NumericTerm {
  double exponent;
  double value;
};

std::vector<NumericTerm> numeric_terms(const FracSeries& s, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in (0, 1]");
  std::vector<NumericTerm> terms;
  terms.reserve(s.terms().size());
  for (const auto& [k, c] : s.terms()) terms.push_back({k * alpha, evaluate(c, alpha)});
  return terms;
}

inline double sum_terms(const std::vector<NumericTerm>& terms, double t) {
  double total = 0.0;
  for (const auto& term : terms) {
    total += term.value * (term.exponent == 0.0 ? 1.0 : std::pow(t, term.exponent));
  }
  return total;
}

void check_grid(std::span<const double> ts) {
  for (double t : ts) {
    if (!(t >= 0.0)) throw std::domain_error("grid points must be >= 0");
  }
}

}  // namespace

std::vector<double> linspace(double start, double end, int points) {
  if (points < 2) throw std::invalid_argument("linspace: need at least 2 points");
  std::vector<double> out(points);
  const double step = (end - start) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = start + step * i;
  out.back() = end;
  return out;
}

std::vector<double> evaluate_grid_serial(const FracSeries& s, double alpha, std::span<const double> ts) {
  check_grid(ts);
  const auto terms = numeric_terms(s, alpha);
  std::vector<double> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = sum_terms(terms, ts[i]);
  return out;
}

std::vector<double> evaluate_grid(const FracSeries& s, double alpha, std::span<const double> ts) {
  check_grid(ts);
  const auto terms = numeric_terms(s, alpha);
  std::vector<double> out(ts.size());
  const long n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = sum_terms(terms, ts[i]);
  return out;
}

SweepTable sweep_serial(const FracSeries& s, std::span<const double> alphas, std::span<const double> ts) {
  SweepTable table;
  table.reserve(alphas.size());
  for (double a : alphas) table.push_back(evaluate_grid_serial(s, a, ts));
  return table;
}

SweepTable sweep(const FracSeries& s, std::span<const double> alphas, std::span<const double> ts) {
  check_grid(ts);
  // Gamma evaluation stays serial; only the flattened (alpha, t) grid is shared.
  std::vector<std::vector<NumericTerm>> terms;
  terms.reserve(alphas.size());
  for (double a : alphas) terms.push_back(numeric_terms(s, a));

  SweepTable table(alphas.size(), std::vector<double>(ts.size()));
  const long rows = static_cast<long>(alphas.size());
  const long cols = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < rows * cols; ++idx) {
    const long r = idx / cols;
    const long c = idx % cols;
    table[r][c] = sum_terms(terms[r], ts[c]);
  }
  return table;
}

}  // namespace fadm::kernels
