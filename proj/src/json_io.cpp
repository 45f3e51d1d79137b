// Copyright 2026 The hbk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbk/json_io.hpp"

#include "hbk/errors.hpp"

namespace hbk::io {

json rational_json(const Rational& q) { return json{{"n", q.get_num().get_str()}, {"d", q.get_den().get_str()}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_object() || !j.contains("n")) throw DomainError("malformed rational in JSON");
  Integer n = parse_integer(j.at("n").get<std::string>());
  Integer d = j.contains("d") ? parse_integer(j.at("d").get<std::string>()) : Integer(1);
  if (d == 0) throw DomainError("zero denominator in JSON");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

json polynomial_json(const SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"e", e}, {"n", c.get_num().get_str()}, {"d", c.get_den().get_str()}});
  return json{{"vars", p.vars()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) throw DomainError("malformed polynomial JSON");
  auto vars = j.at("vars").get<std::vector<std::string>>();
  SparsePolynomial p(vars);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<int>>();
    if (e.size() != vars.size()) throw DomainError("exponent length mismatch in polynomial JSON");
    p.add_term(e, rational_from_json(t));
  }
  return p;
}

json upoly_json(const UPolyQ& p, const std::string& var) { return polynomial_json(p.to_sparse(var)); }

UPolyQ upoly_from_json(const json& j, const std::string& var) { return UPolyQ::from_sparse(polynomial_from_json(j), var); }

json series_json(const TruncatedSeries<Rational>& s) {
  json c = json::array();
  for (const auto& v : s.coeffs()) c.push_back(rational_json(v));
  return json{{"var", s.var()}, {"order", s.order()}, {"coeffs", c}};
}

json series_json(const TruncatedSeries<UPolyQ>& s, const std::string& param) {
  json c = json::array();
  for (const auto& v : s.coeffs()) c.push_back(upoly_json(v, param));
  return json{{"var", s.var()}, {"order", s.order()}, {"coeffs", c}};
}

TruncatedSeries<Rational> series_from_json(const json& j) {
  int order = j.at("order").get<int>();
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  if (static_cast<int>(c.size()) != order + 1) throw DomainError("series JSON has wrong coefficient count");
  return TruncatedSeries<Rational>(j.value("var", std::string("t")), order, c);
}

json operator_json(const ThetaOperator& op) {
  json c = json::array();
  for (const auto& a : op.coeffs()) c.push_back(polynomial_json(a));
  return json{{"theta", true}, {"var", op.main_var()}, {"coeffs", c}};
}

ThetaOperator operator_from_json(const json& j) {
  std::string var = j.value("var", std::string("t"));
  std::vector<SparsePolynomial> c;
  for (const auto& p : j.at("coeffs")) c.push_back(polynomial_from_json(p));
  if (j.value("theta", true)) return ThetaOperator(c, var);
  return ThetaOperator::from_d_form(c, var);
}

json shaped_json(const ShapedRational& s) {
  return json{{"numerator", polynomial_json(s.full_numerator())}, {"denominatorExponent", s.denominator_exponent()}};
}

json cyclotomic_json(const CyclotomicNumber& c) {
  json coeffs = json::array();
  for (const auto& v : c.residue().coeffs()) coeffs.push_back(rational_json(v));
  return json{{"order", c.order()}, {"residue", coeffs}};
}

}  // namespace hbk::io
