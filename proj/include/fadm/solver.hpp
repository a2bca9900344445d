#pragma once

#include <optional>
#include <vector>

#include "fadm/adomian.hpp"
#include "fadm/series.hpp"

namespace fadm {

/// D^(n alpha) y - N(y) = f with y^(k alpha)(0) = init[k], k = 0..n-1.
///
/// alpha only matters for numeric evaluation; the symbolic solve is exact in
/// alpha through the Gamma(1 + k alpha) factors.
struct ProblemSpec {
  int n = 1;
  double alpha = 1.0;
  PolyNonlinearity nonlinearity;
  FracSeries forcing;
  std::vector<Rational> init;
  int max_grade = kDefaultMaxGrade;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

struct AdmSolution {
  std::vector<FracSeries> ys;
  FracSeries partial;
  int iterations = 0;
  bool truncated = false;
  /// Grades up to here are unaffected by truncation, including after the
  /// n-fold derivative taken by the residual.
  int valid_grade = 0;
};

/// y0 = sum_{k<n} init[k] t^(k a)/Gamma(1+k a) + L^{-n a} f.
FracSeries build_y0(const ProblemSpec& p);

/// y_{k+1} = L^{-n a} A_k for k = 0..m-1.
AdmSolution adm_iterate(const ProblemSpec& p, int m);

/// D^(n a)(partial) - N(partial) - f, truncated to sol.valid_grade.
FracSeries residual(const ProblemSpec& p, const AdmSolution& sol);

/// Lowest surviving grade of the residual; nullopt when it vanishes through valid_grade.
std::optional<int> residual_lowest_grade(const ProblemSpec& p, const AdmSolution& sol);

}  // namespace fadm
