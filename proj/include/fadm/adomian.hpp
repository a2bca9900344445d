#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fadm/series.hpp"

namespace fadm {

/// Polynomial nonlinearity N(y) = sum_j c_j y^j with exact coefficients.
class PolyNonlinearity {
 public:
  PolyNonlinearity() = default;
  explicit PolyNonlinearity(std::map<int, Rational> coeffs);

  /// Parses the power-term grammar: terms like "1*y^2", "y^3", "-2*y", "0.5",
  /// joined by '+' or '-'. Throws std::invalid_argument on malformed text.
  static PolyNonlinearity parse(const std::string& text);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_empty() const { return coeffs_.empty(); }
  /// No power >= 2 present: N is linear (or absent).
  bool is_degenerate() const;
  int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /// d/dy of the polynomial.
  PolyNonlinearity derivative() const;
  /// N applied to a series through series arithmetic.
  FracSeries apply(const FracSeries& y) const;
  /// N at a real point (used by the numeric oracles).
  double apply(double y) const;

  friend bool operator==(const PolyNonlinearity&, const PolyNonlinearity&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

std::string to_string(const PolyNonlinearity& n);

/// A_0..A_m together with the y_0..y_m they were built from.
struct AdomianSequence {
  std::vector<FracSeries> polys;
  std::vector<FracSeries> source;
};

/// A_n = coefficient of lambda^n in N(sum_{k<=m} lambda^k y_k), n = 0..m,
/// by exact polynomial arithmetic in lambda over series coefficients.
/// Requires ys.size() >= m + 1.
AdomianSequence adomian_polynomials(const PolyNonlinearity& n, std::span<const FracSeries> ys,
                                    int m);

/// Closed forms for n <= 3:
///   A0 = N(y0)
///   A1 = y1 N'(y0)
///   A2 = y2 N'(y0) + y1^2/2! N''(y0)
///   A3 = y3 N'(y0) + y1 y2 N''(y0) + y1^3/3! N'''(y0)
/// Throws std::out_of_range for n > 3.
FracSeries adomian_closed_form(const PolyNonlinearity& n, std::span<const FracSeries> ys, int order);

}  // namespace fadm
