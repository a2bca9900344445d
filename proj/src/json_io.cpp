#include "fadm/json_io.hpp"

#include <stdexcept>

namespace fadm {

using nlohmann::json;

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal integer string");
}

}  // namespace

json to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(integer_from_json(j[0]), den);
  q.canonicalize();
  return q;
}

json to_json(const GammaCoefficient& c) {
  json atoms = json::array();
  for (const auto& atom : c.atoms()) {
    json factors = json::array();
    for (const auto& f : atom.factors) factors.push_back({f.grade, f.exponent});
    atoms.push_back({{"rational", to_json(atom.rational)}, {"factors", factors}});
  }
  return atoms;
}

GammaCoefficient coefficient_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient must be an array of atoms");
  std::vector<GammaAtom> atoms;
  for (const auto& a : j) {
    GammaAtom atom;
    atom.rational = rational_from_json(a.at("rational"));
    for (const auto& f : a.at("factors")) {
      if (!f.is_array() || f.size() != 2) throw std::invalid_argument("factor must be [grade, exponent]");
      atom.factors.push_back({f[0].get<int>(), f[1].get<int>()});
    }
    atoms.push_back(std::move(atom));
  }
  return GammaCoefficient::from_atoms(atoms);
}

json to_json(const FracSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({k, to_json(c)});
  return {{"max_grade", s.max_grade()}, {"truncated", s.truncated()}, {"terms", terms}};
}

FracSeries series_from_json(const json& j) {
  FracSeries s(j.at("max_grade").get<int>());
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("term must be [grade, coefficient]");
    int k = term[0].get<int>();
    if (k > s.max_grade()) throw std::invalid_argument("term grade exceeds max_grade");
    s.add_term(k, coefficient_from_json(term[1]));
  }
  if (j.value("truncated", false)) s.mark_truncated();
  return s;
}

}  // namespace fadm
