#include "fadm/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fadm {

void ProblemSpec::validate() const {
  if (n < 1) throw std::invalid_argument("problem: n must be >= 1");
  if (!(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("problem: alpha must lie in (0, 1]");
  }
  if (init.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("problem: init must have exactly n = " + std::to_string(n) +
                                " entries, got " + std::to_string(init.size()));
  }
  if (max_grade < n) throw std::invalid_argument("problem: max_grade must be >= n");
}

FracSeries build_y0(const ProblemSpec& p) {
  p.validate();
  FracSeries y0(p.max_grade);
  for (int k = 0; k < p.n; ++k) {
    y0.add_term(k, GammaCoefficient::gamma_power(k, -1) * p.init[k]);
  }
  y0 += jumarie_integral(p.forcing.truncated_to(std::max(p.forcing.max_grade(), p.max_grade)),
                         p.n)
            .truncated_to(p.max_grade);
  return y0;
}

AdmSolution adm_iterate(const ProblemSpec& p, int m) {
  if (m < 0) throw std::invalid_argument("adm_iterate: m must be >= 0");
  AdmSolution sol;
  sol.ys.push_back(build_y0(p));
  for (int k = 0; k < m; ++k) {
    auto seq = adomian_polynomials(p.nonlinearity, sol.ys, k);
    sol.ys.push_back(jumarie_integral(seq.polys[k], p.n));
  }
  sol.partial = FracSeries(p.max_grade);
  for (const auto& y : sol.ys) sol.partial += y;
  sol.iterations = m;
  sol.truncated = sol.partial.truncated();
  // Every operation in the iteration raises grades, so stored terms are exact;
  // the residual's n-fold derivative pulls dropped terms down by n grades.
  sol.valid_grade = sol.truncated ? p.max_grade - p.n : p.max_grade;
  return sol;
}

FracSeries residual(const ProblemSpec& p, const AdmSolution& sol) {
  FracSeries r = jumarie_derivative(sol.partial, p.n);
  r -= p.nonlinearity.apply(sol.partial);
  r -= p.forcing;
  return r.truncated_to(sol.valid_grade);
}

std::optional<int> residual_lowest_grade(const ProblemSpec& p, const AdmSolution& sol) {
  return residual(p, sol).lowest_grade();
}

}  // namespace fadm
