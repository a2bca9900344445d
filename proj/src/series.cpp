#include "fadm/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fadm {

FracSeries::FracSeries(int max_grade) : max_grade_(max_grade) {
  if (max_grade < 0) throw std::invalid_argument("FracSeries: max_grade must be >= 0");
}

FracSeries FracSeries::monomial(int grade, GammaCoefficient c, int max_grade) {
  FracSeries s(max_grade);
  s.add_term(grade, c);
  return s;
}

FracSeries FracSeries::constant(GammaCoefficient c, int max_grade) {
  return monomial(0, std::move(c), max_grade);
}

GammaCoefficient FracSeries::coefficient(int grade) const {
  auto it = terms_.find(grade);
  return it == terms_.end() ? GammaCoefficient{} : it->second;
}

std::optional<int> FracSeries::lowest_grade() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

void FracSeries::add_term(int grade, const GammaCoefficient& c) {
  if (grade < 0) throw std::invalid_argument("FracSeries: negative grade");
  if (c.is_zero()) return;
  if (grade > max_grade_) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(grade, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FracSeries FracSeries::truncated_to(int max_grade) const {
  FracSeries out(max_grade);
  out.truncated_ = truncated_;
  for (const auto& [k, c] : terms_) out.add_term(k, c);
  return out;
}

FracSeries& FracSeries::operator+=(const FracSeries& other) {
  if (other.max_grade_ < max_grade_) *this = truncated_to(other.max_grade_);
  truncated_ = truncated_ || other.truncated_;
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& other) { return *this += -other; }

FracSeries& FracSeries::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second *= scale;
  return *this;
}

FracSeries FracSeries::operator-() const {
  FracSeries out = *this;
  for (auto& entry : out.terms_) entry.second = -entry.second;
  return out;
}

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
  FracSeries out(std::min(a.max_grade_, b.max_grade_));
  out.truncated_ = a.truncated_ || b.truncated_;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

FracSeries jumarie_integral(const FracSeries& s) {
  FracSeries out(s.max_grade());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [k, c] : s.terms()) {
    auto ratio = GammaCoefficient::from_atoms(
        {GammaAtom{Rational(1), {{k, 1}, {k + 1, -1}}}});
    out.add_term(k + 1, c * ratio);
  }
  return out;
}

FracSeries jumarie_derivative(const FracSeries& s) {
  FracSeries out(s.max_grade());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [k, c] : s.terms()) {
    if (k == 0) continue;
    auto ratio = GammaCoefficient::from_atoms(
        {GammaAtom{Rational(1), {{k, 1}, {k - 1, -1}}}});
    out.add_term(k - 1, c * ratio);
  }
  return out;
}

FracSeries jumarie_integral(const FracSeries& s, int times) {
  FracSeries out = s;
  for (int i = 0; i < times; ++i) out = jumarie_integral(out);
  return out;
}

FracSeries jumarie_derivative(const FracSeries& s, int times) {
  FracSeries out = s;
  for (int i = 0; i < times; ++i) out = jumarie_derivative(out);
  return out;
}

double evaluate(const FracSeries& s, double alpha, double t) {
  if (t < 0.0) throw std::domain_error("evaluate: t must be >= 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("evaluate: alpha must lie in (0, 1]");
  double total = 0.0;
  for (const auto& [k, c] : s.terms()) {
    const double power = k == 0 ? 1.0 : std::pow(t, k * alpha);
    total += evaluate(c, alpha) * power;
  }
  return total;
}

namespace {

std::string t_power(int grade) {
  if (grade == 0) return {};
  return grade == 1 ? std::string("t^a") : "t^" + std::to_string(grade) + "a";
}

std::string gamma_power_text(const GammaFactor& f) {
  std::string base = "G(" + gamma_argument(f.grade) + ")";
  int e = std::abs(f.exponent);
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// One atom times t^(grade a); returns the unsigned text and the sign.
std::pair<std::string, bool> render_atom(const GammaAtom& atom, int grade) {
  bool negative = sgn(atom.rational) < 0;
  mpz_class num = abs(atom.rational.get_num());
  const mpz_class& den = atom.rational.get_den();

  std::vector<std::string> upper;
  std::vector<std::string> lower;
  if (num != 1) upper.push_back(num.get_str());
  if (den != 1) lower.push_back(den.get_str());
  for (const auto& f : atom.factors) {
    (f.exponent > 0 ? upper : lower).push_back(gamma_power_text(f));
  }
  if (grade > 0) upper.push_back(t_power(grade));

  std::string text = upper.empty() ? std::string("1") : join(upper, "*");
  if (!lower.empty()) {
    text += lower.size() == 1 ? "/" + lower.front() : "/(" + join(lower, "*") + ")";
  }
  return {text, negative};
}

}  // namespace

std::string to_string(const FracSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    for (const auto& atom : c.atoms()) {
      auto [text, negative] = render_atom(atom, k);
      if (out.empty()) {
        out = negative ? "-" + text : text;
      } else {
        out += negative ? " - " : " + ";
        out += text;
      }
    }
  }
  return out;
}

}  // namespace fadm
