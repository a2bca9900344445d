#include "fadm/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fadm {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

GammaFactors multiply_factors(const GammaFactors& a, const GammaFactors& b) {
  GammaFactors out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->grade < ib->grade)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->grade < ia->grade) {
      out.push_back(*ib++);
    } else {
      int e = ia->exponent + ib->exponent;
      if (e != 0) out.push_back({ia->grade, e});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("gamma: argument must be positive and finite");
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

GammaCoefficient::GammaCoefficient(const Rational& value) { accumulate({}, value); }

GammaCoefficient GammaCoefficient::from_atoms(const std::vector<GammaAtom>& atoms) {
  GammaCoefficient c;
  for (const auto& atom : atoms) {
    GammaFactors merged;
    for (const auto& f : atom.factors) {
      if (f.grade < 0) throw std::invalid_argument("GammaCoefficient: negative grade");
      if (f.grade == 0 || f.exponent == 0) continue;
      merged = multiply_factors(merged, GammaFactors{f});
    }
    c.accumulate(merged, atom.rational);
  }
  return c;
}

GammaCoefficient GammaCoefficient::gamma_power(int grade, int exponent) {
  return from_atoms({GammaAtom{Rational(1), {{grade, exponent}}}});
}

std::vector<GammaAtom> GammaCoefficient::atoms() const {
  std::vector<GammaAtom> out;
  out.reserve(atoms_.size());
  for (const auto& [factors, rational] : atoms_) out.push_back({rational, factors});
  return out;
}

void GammaCoefficient::accumulate(const GammaFactors& factors, const Rational& rational) {
  Rational q = rational;
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = atoms_.try_emplace(factors, std::move(q));
  if (!inserted) {
    it->second += q;
    if (it->second == 0) atoms_.erase(it);
  }
}

GammaCoefficient& GammaCoefficient::operator+=(const GammaCoefficient& other) {
  for (const auto& [factors, rational] : other.atoms_) accumulate(factors, rational);
  return *this;
}

GammaCoefficient& GammaCoefficient::operator-=(const GammaCoefficient& other) {
  for (const auto& [factors, rational] : other.atoms_) accumulate(factors, -rational);
  return *this;
}

GammaCoefficient& GammaCoefficient::operator*=(const GammaCoefficient& other) {
  GammaCoefficient product;
  for (const auto& [fa, ra] : atoms_) {
    for (const auto& [fb, rb] : other.atoms_) {
      product.accumulate(multiply_factors(fa, fb), ra * rb);
    }
  }
  *this = std::move(product);
  return *this;
}

GammaCoefficient& GammaCoefficient::operator*=(const Rational& scale) {
  if (scale == 0) {
    atoms_.clear();
  } else {
    for (auto& entry : atoms_) entry.second *= scale;
  }
  return *this;
}

GammaCoefficient GammaCoefficient::operator-() const {
  GammaCoefficient c = *this;
  for (auto& entry : c.atoms_) entry.second = -entry.second;
  return c;
}

double evaluate(const GammaCoefficient& c, double alpha) {
  double total = 0.0;
  for (const auto& atom : c.atoms()) {
    double term = atom.rational.get_d();
    for (const auto& f : atom.factors) {
      term *= std::pow(gamma(1.0 + f.grade * alpha), f.exponent);
    }
    total += term;
  }
  return total;
}

std::string gamma_argument(int grade) {
  return grade == 1 ? std::string("1+a") : "1+" + std::to_string(grade) + "a";
}

std::string to_string(const GammaCoefficient& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& atom : c.atoms()) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(atom.rational);
    for (int sign : {1, -1}) {
      for (const auto& f : atom.factors) {
        if ((f.exponent > 0) != (sign > 0)) continue;
        out += " * G(" + gamma_argument(f.grade) + ")^" + std::to_string(f.exponent);
      }
    }
  }
  return out;
}

}  // namespace fadm
