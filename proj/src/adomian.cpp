#include "fadm/adomian.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace fadm {

PolyNonlinearity::PolyNonlinearity(std::map<int, Rational> coeffs) {
  for (auto& [power, c] : coeffs) {
    if (power < 0) throw std::invalid_argument("nonlinearity: negative power");
    if (c != 0) coeffs_.emplace(power, std::move(c));
  }
}

PolyNonlinearity PolyNonlinearity::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::map<int, Rational> coeffs;
  if (s.empty()) return PolyNonlinearity{};

  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("nonlinearity '" + text + "': " + why);
  };

  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      // Allow a signed exponent in a decimal literal such as 1e-3.
      if ((s[end] == 'e' || s[end] == 'E') && end + 1 < s.size() &&
          (s[end + 1] == '+' || s[end + 1] == '-')) {
        end += 2;
        continue;
      }
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) fail("empty term");
    pos = end;

    Rational c(1);
    int power = 0;
    auto y_at = term.find('y');
    if (y_at == std::string::npos) {
      c = parse_rational(term);
    } else {
      std::string coef = term.substr(0, y_at);
      std::string rest = term.substr(y_at + 1);
      if (!coef.empty()) {
        if (coef.back() != '*') fail("expected '*' before 'y'");
        coef.pop_back();
        c = parse_rational(coef);
      }
      power = 1;
      if (!rest.empty()) {
        if (rest.front() != '^' || rest.size() < 2) fail("expected '^<power>' after 'y'");
        for (std::size_t i = 1; i < rest.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(rest[i]))) fail("power must be a nonnegative integer");
        }
        if (rest.size() > 4) fail("power too large");
        power = std::stoi(rest.substr(1));
      }
    }
    if (negative) c = -c;
    coeffs[power] += c;
  }
  return PolyNonlinearity(std::move(coeffs));
}

bool PolyNonlinearity::is_degenerate() const {
  return coeffs_.empty() || coeffs_.rbegin()->first < 2;
}

PolyNonlinearity PolyNonlinearity::derivative() const {
  std::map<int, Rational> d;
  for (const auto& [power, c] : coeffs_) {
    if (power > 0) d.emplace(power - 1, c * power);
  }
  return PolyNonlinearity(std::move(d));
}

FracSeries PolyNonlinearity::apply(const FracSeries& y) const {
  FracSeries result(y.max_grade());
  if (y.truncated()) result.mark_truncated();
  FracSeries power = FracSeries::constant(Rational(1), y.max_grade());
  int current = 0;
  for (const auto& [j, c] : coeffs_) {
    while (current < j) {
      power = power * y;
      ++current;
    }
    result += power * c;
  }
  return result;
}

double PolyNonlinearity::apply(double y) const {
  double total = 0.0;
  for (const auto& [j, c] : coeffs_) total += c.get_d() * std::pow(y, j);
  return total;
}

std::string to_string(const PolyNonlinearity& n) {
  if (n.is_empty()) return "0";
  std::string out;
  for (const auto& [j, c] : n.coeffs()) {
    Rational mag = abs(c);
    std::string coef = mag.get_den() == 1 ? mag.get_num().get_str() : rational_to_string(mag);
    std::string term = j == 0 ? coef : coef + "*y" + (j == 1 ? "" : "^" + std::to_string(j));
    if (out.empty()) {
      out = sgn(c) < 0 ? "-" + term : term;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

using LambdaPoly = std::vector<FracSeries>;  // index = lambda degree

LambdaPoly lambda_mul(const LambdaPoly& a, const LambdaPoly& b, int max_degree, int max_grade) {
  LambdaPoly out(max_degree + 1, FracSeries(max_grade));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() && !a[i].truncated()) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_degree; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

AdomianSequence adomian_polynomials(const PolyNonlinearity& n, std::span<const FracSeries> ys,
                                    int m) {
  if (m < 0) throw std::invalid_argument("adomian_polynomials: m must be >= 0");
  if (ys.size() < static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("adomian_polynomials: need at least m+1 components");
  }
  int max_grade = ys[0].max_grade();
  for (int k = 0; k <= m; ++k) max_grade = std::min(max_grade, ys[k].max_grade());

  LambdaPoly y(ys.begin(), ys.begin() + m + 1);
  LambdaPoly power(m + 1, FracSeries(max_grade));
  power[0] = FracSeries::constant(Rational(1), max_grade);
  LambdaPoly total(m + 1, FracSeries(max_grade));

  int current = 0;
  for (const auto& [j, c] : n.coeffs()) {
    while (current < j) {
      power = lambda_mul(power, y, m, max_grade);
      ++current;
    }
    for (int d = 0; d <= m; ++d) total[d] += power[d] * c;
  }

  AdomianSequence seq;
  seq.polys = std::move(total);
  seq.source.assign(ys.begin(), ys.begin() + m + 1);
  return seq;
}

FracSeries adomian_closed_form(const PolyNonlinearity& n, std::span<const FracSeries> ys, int order) {
  if (order < 0 || order > 3) throw std::out_of_range("adomian_closed_form: only A0..A3 are available");
  if (ys.size() < static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("adomian_closed_form: need at least n+1 components");
  }
  const auto d1 = n.derivative();
  const auto d2 = d1.derivative();
  const auto d3 = d2.derivative();
  const FracSeries& y0 = ys[0];
  switch (order) {
    case 0:
      return n.apply(y0);
    case 1:
      return ys[1] * d1.apply(y0);
    case 2:
      return ys[2] * d1.apply(y0) + (ys[1] * ys[1]) * d2.apply(y0) * Rational(1, 2);
    default:
      return ys[3] * d1.apply(y0) + (ys[1] * ys[2]) * d2.apply(y0) +
             (ys[1] * ys[1] * ys[1]) * d3.apply(y0) * Rational(1, 6);
  }
}

}  // namespace fadm
