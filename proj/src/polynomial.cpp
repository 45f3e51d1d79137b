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

#include "hbk/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hbk/errors.hpp"

namespace hbk {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  // Within a degree, an earlier variable with a smaller exponent sorts first.
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

SparsePolynomial::SparsePolynomial(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
  if (c != 0) terms_.emplace(Exponent(vars_.size(), 0), c);
}

SparsePolynomial::SparsePolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

SparsePolynomial SparsePolynomial::variable(const std::vector<std::string>& vars, std::size_t index, int power) {
  Exponent e(vars.size(), 0);
  e.at(index) = power;
  return monomial(vars, std::move(e), 1);
}

SparsePolynomial SparsePolynomial::monomial(const std::vector<std::string>& vars, Exponent e, const Rational& c) {
  if (e.size() != vars.size()) throw DomainError("monomial exponent length does not match variable count");
  SparsePolynomial p(vars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool SparsePolynomial::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

Rational SparsePolynomial::constant_value() const { return coeff(Exponent(vars_.size(), 0)); }

Rational SparsePolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != vars_.size()) throw DomainError("term exponent length does not match variable count");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t SparsePolynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

SparsePolynomial SparsePolynomial::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<long> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) map[i] = it - vars.begin();
  }
  SparsePolynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw DomainError("variable '" + vars_[i] + "' is used but missing from the target list");
      ne[static_cast<std::size_t>(map[i])] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::compact_vars() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool occurs = false;
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        occurs = true;
        break;
      }
    if (occurs) used.push_back(vars_[i]);
  }
  return with_vars(used);
}

long SparsePolynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

int SparsePolynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int SparsePolynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

std::pair<Exponent, Rational> SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void SparsePolynomial::require_compatible(const SparsePolynomial& o, std::vector<std::string>* unified) const {
  if (vars_ == o.vars_) {
    *unified = vars_;
    return;
  }
  if (o.vars_.empty() && o.is_constant()) {
    *unified = vars_;
    return;
  }
  if (vars_.empty() && is_constant()) {
    *unified = o.vars_;
    return;
  }
  throw DomainError("polynomials over different variable lists");
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  std::vector<std::string> u;
  require_compatible(o, &u);
  if (u != vars_) *this = with_vars(u);
  if (o.vars_ != u) {
    for (const auto& [e, c] : o.with_vars(u).terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
  }
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) { return *this += -o; }

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  std::vector<std::string> u;
  a.require_compatible(b, &u);
  const SparsePolynomial& x = a.vars_ == u ? a : a.with_vars(u);
  SparsePolynomial yv;
  const SparsePolynomial* y = &b;
  if (b.vars_ != u) {
    yv = b.with_vars(u);
    y = &yv;
  }
  SparsePolynomial r(u);
  Exponent e(u.size());
  Rational prod;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y->terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(e, prod);
    }
  }
  return r;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& o) {
  *this = *this * o;
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
  std::vector<std::string> u;
  try {
    a.require_compatible(b, &u);
  } catch (const DomainError&) {
    return false;
  }
  return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
  SparsePolynomial result(vars_, 1);
  SparsePolynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponent ne = e;
    ne[var] -= 1;
    r.terms_.emplace(std::move(ne), c * e[var]);
  }
  return r;
}

SparsePolynomial SparsePolynomial::euler_derivative(std::size_t var) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_)
    if (e.at(var) != 0) r.terms_.emplace(e, c * e[var]);
  return r;
}

SparsePolynomial SparsePolynomial::shifted(const Exponent& shift) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift.at(i);
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

SparsePolynomial SparsePolynomial::substitute(std::size_t var, const Rational& value) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne.at(var) = 0;
    r.add_term(ne, c * rpow(value, e[var]));
  }
  return r;
}

SparsePolynomial SparsePolynomial::substitute(std::size_t var, const SparsePolynomial& value) const {
  // Horner-free: group by power of var, reuse the powers of value.
  auto coeffs = coefficients_in(var);
  int lo = min_degree_in(var);
  if (lo < 0) throw DomainError("polynomial substitution into a negative power");
  SparsePolynomial vv = value.vars_ == vars_ ? value : value.with_vars(vars_);
  SparsePolynomial r(vars_);
  SparsePolynomial power = vv.pow(static_cast<unsigned>(lo));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) r += coeffs[k] * power;
    if (k + 1 < coeffs.size()) power *= vv;
  }
  return r;
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= rpow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

SparsePolynomial SparsePolynomial::constant_term_in(const std::vector<std::size_t>& torus_vars) const {
  std::vector<std::string> rest;
  std::vector<bool> is_torus(vars_.size(), false);
  for (auto v : torus_vars) is_torus.at(v) = true;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!is_torus[i]) rest.push_back(vars_[i]);
  SparsePolynomial r(rest);
  for (const auto& [e, c] : terms_) {
    bool zero = true;
    for (auto v : torus_vars)
      if (e[v] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    Exponent ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!is_torus[i]) ne.push_back(e[i]);
    r.add_term(ne, c);
  }
  return r;
}

SparsePolynomial SparsePolynomial::divide_exponents(std::size_t var, int k) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) % k != 0)
      throw InvariantViolation("exponent of '" + vars_[var] + "' not divisible by " + std::to_string(k));
    Exponent ne = e;
    ne[var] /= k;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

Rational SparsePolynomial::content() const {
  if (terms_.empty()) throw DomainError("content of the zero polynomial");
  Integer g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c.get_num());
    l = lcm(l, c.get_den());
  }
  Rational cont(g, l);
  cont.canonicalize();
  if (terms_.rbegin()->second < 0) cont = -cont;
  return cont;
}

SparsePolynomial SparsePolynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  SparsePolynomial r = *this;
  r *= Rational(1) / content();
  return r;
}

bool SparsePolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

bool SparsePolynomial::divides(const SparsePolynomial& b, const SparsePolynomial& a, SparsePolynomial* quotient) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<std::string> u;
  a.require_compatible(b, &u);
  SparsePolynomial r = a.with_vars(u);
  SparsePolynomial d = b.with_vars(u);
  SparsePolynomial q(u);
  auto [lb_e, lb_c] = d.leading_term();
  Exponent qe(u.size());
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = *r.terms_.rbegin();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = lr_e[i] - lb_e[i];
      if (qe[i] < 0) return false;
    }
    Rational qc = lr_c / lb_c;
    q.add_term(qe, qc);
    Exponent te(u.size());
    for (const auto& [de, dc] : d.terms_) {
      for (std::size_t i = 0; i < te.size(); ++i) te[i] = de[i] + qe[i];
      r.add_term(te, -qc * dc);
    }
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

SparsePolynomial SparsePolynomial::exact_divide(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial q;
  if (!divides(b, a, &q)) throw DomainError("inexact polynomial division");
  return q;
}

std::vector<SparsePolynomial> SparsePolynomial::coefficients_in(std::size_t var) const {
  if (terms_.empty()) return {};
  int lo = min_degree_in(var), hi = degree_in(var);
  std::vector<SparsePolynomial> out(static_cast<std::size_t>(hi - lo + 1), SparsePolynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[var] = 0;
    out[static_cast<std::size_t>(e[var] - lo)].terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    bool unit_coeff = a == 1;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!unit_coeff || constant) {
      os << hbk::to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace hbk
