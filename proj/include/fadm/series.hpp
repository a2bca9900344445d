#pragma once

#include <map>
#include <optional>
#include <string>

#include "fadm/gamma.hpp"

namespace fadm {

inline constexpr int kDefaultMaxGrade = 12;

/// Truncated fractional power series sum_k c_k t^(k*alpha), k = 0..max_grade.
///
/// Grade k is the integer multiplier of alpha in the exponent. Zero
/// coefficients are never stored. Arithmetic that would produce grades above
/// max_grade drops those terms and sets the sticky `truncated()` flag.
class FracSeries {
 public:
  explicit FracSeries(int max_grade = kDefaultMaxGrade);

  /// c * t^(grade*alpha).
  static FracSeries monomial(int grade, GammaCoefficient c, int max_grade = kDefaultMaxGrade);
  static FracSeries constant(GammaCoefficient c, int max_grade = kDefaultMaxGrade);

  int max_grade() const { return max_grade_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, GammaCoefficient>& terms() const { return terms_; }

  /// Coefficient at `grade`, zero when absent.
  GammaCoefficient coefficient(int grade) const;
  /// Lowest stored grade, nullopt for the zero series.
  std::optional<int> lowest_grade() const;

  /// Adds c to the grade term; grades above max_grade are dropped and flagged.
  void add_term(int grade, const GammaCoefficient& c);
  void mark_truncated() { truncated_ = true; }

  /// Copy with max_grade lowered to `max_grade`, dropping (and flagging) higher terms.
  FracSeries truncated_to(int max_grade) const;

  FracSeries& operator+=(const FracSeries& other);
  FracSeries& operator-=(const FracSeries& other);
  FracSeries& operator*=(const Rational& scale);

  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(FracSeries a, const Rational& s) { return a *= s; }
  friend FracSeries operator*(const Rational& s, FracSeries a) { return a *= s; }
  /// Cauchy product on grades.
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  FracSeries operator-() const;

  /// Structural equality of terms and max_grade; the truncation flag is ignored.
  friend bool operator==(const FracSeries& a, const FracSeries& b) {
    return a.max_grade_ == b.max_grade_ && a.terms_ == b.terms_;
  }

 private:
  int max_grade_;
  bool truncated_ = false;
  std::map<int, GammaCoefficient> terms_;
};

/// Single Jumarie integral of order alpha:
/// c t^(k a) -> c Gamma(1+k a)/Gamma(1+(k+1) a) t^((k+1) a).
FracSeries jumarie_integral(const FracSeries& s);

/// Single Jumarie derivative of order alpha. Constants map to zero;
/// c t^(k a) -> c Gamma(1+k a)/Gamma(1+(k-1) a) t^((k-1) a) for k >= 1.
FracSeries jumarie_derivative(const FracSeries& s);

/// `times`-fold application of the integral (the L^{-n alpha} operator).
FracSeries jumarie_integral(const FracSeries& s, int times);
FracSeries jumarie_derivative(const FracSeries& s, int times);

/// sum_k evaluate(c_k, alpha) * t^(k alpha), with 0^0 = 1.
double evaluate(const FracSeries& s, double alpha, double t);

/// Paper-style text, e.g. "t^a/G(1+a) + t^2a/G(1+2a)". Zero renders as "0".
std::string to_string(const FracSeries& s);

}  // namespace fadm
