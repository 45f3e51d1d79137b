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

#include "hbk/operator.hpp"

#include <algorithm>
#include <sstream>

#include "hbk/errors.hpp"

namespace hbk {

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j)
      row[static_cast<std::size_t>(j)] = j == 0 ? Integer(0) : Integer(row[static_cast<std::size_t>(j) - 1] + j * row[static_cast<std::size_t>(j)]);
  return row[static_cast<std::size_t>(k)];
}

Integer stirling1_signed(int n, int k) {
  // Coefficients of the falling factorial x(x-1)...(x-n+1).
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> c{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> nc(c.size() + 1, Integer(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      nc[j + 1] += c[j];
      nc[j] -= c[j] * i;
    }
    c = std::move(nc);
  }
  return c[static_cast<std::size_t>(k)];
}

ThetaOperator::ThetaOperator(std::vector<SparsePolynomial> coeffs, std::string main_var) : var_(std::move(main_var)) {
  if (coeffs.empty()) throw DomainError("operator without coefficients");
  // Unify the variable lists; constants adopt the list of the others.
  for (const auto& c : coeffs)
    if (c.nvars() > vars_.size()) vars_ = c.vars();
  if (std::find(vars_.begin(), vars_.end(), var_) == vars_.end()) vars_.push_back(var_);
  for (auto& c : coeffs) a_.push_back(c.with_vars(vars_));
  idx_ = static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), var_) - vars_.begin());
  while (a_.size() > 1 && a_.back().is_zero()) a_.pop_back();
  if (a_.back().is_zero()) throw DomainError("zero operator");
}

int ThetaOperator::degree() const {
  int d = 0;
  for (const auto& c : a_)
    if (!c.is_zero()) d = std::max(d, c.degree_in(idx_));
  return d;
}

ThetaOperator ThetaOperator::from_d_form(const std::vector<SparsePolynomial>& p, const std::string& main_var) {
  ThetaOperator tmp(p, main_var);  // unifies variables
  const auto& vars = tmp.vars_;
  std::size_t idx = tmp.idx_;
  int D = static_cast<int>(p.size()) - 1;
  std::vector<SparsePolynomial> a(p.size(), SparsePolynomial(vars));
  for (int i = 0; i <= D; ++i) {
    const SparsePolynomial& pi = tmp.a_.size() > static_cast<std::size_t>(i) ? tmp.a_[static_cast<std::size_t>(i)] : SparsePolynomial(vars);
    if (pi.is_zero()) continue;
    Exponent sh(vars.size(), 0);
    sh[idx] = -i;
    SparsePolynomial base = pi.shifted(sh);
    for (int d = 0; d <= i; ++d) {
      Integer s = stirling1_signed(i, d);
      if (s != 0) a[static_cast<std::size_t>(d)] += base * Rational(s);
    }
  }
  int lo = 0;
  bool first = true;
  for (const auto& c : a)
    if (!c.is_zero()) {
      lo = first ? c.min_degree_in(idx) : std::min(lo, c.min_degree_in(idx));
      first = false;
    }
  Exponent sh(vars.size(), 0);
  sh[idx] = -lo;
  for (auto& c : a) c = c.shifted(sh);
  return ThetaOperator(a, main_var);
}

std::vector<SparsePolynomial> ThetaOperator::to_d_form() const {
  std::vector<SparsePolynomial> p(a_.size(), SparsePolynomial(vars_));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t d = i; d < a_.size(); ++d) {
      Integer s = stirling2(static_cast<int>(d), static_cast<int>(i));
      if (s != 0) p[i] += a_[d] * Rational(s);
    }
    Exponent sh(vars_.size(), 0);
    sh[idx_] = static_cast<int>(i);
    p[i] = p[i].shifted(sh);
  }
  return p;
}

ThetaOperator ThetaOperator::normal_form() const {
  int lo = 0;
  bool first = true;
  for (const auto& c : a_)
    if (!c.is_zero()) {
      lo = first ? c.min_degree_in(idx_) : std::min(lo, c.min_degree_in(idx_));
      first = false;
    }
  Exponent sh(vars_.size(), 0);
  sh[idx_] = -lo;
  Integer g = 0, l = 1;
  for (const auto& c : a_)
    for (const auto& [e, v] : c.terms()) {
      g = gcd(g, v.get_num());
      l = lcm(l, v.get_den());
    }
  Rational f(l, g);
  f.canonicalize();
  if (a_.back().terms().begin()->second < 0) f = -f;
  std::vector<SparsePolynomial> out;
  for (const auto& c : a_) out.push_back(c.shifted(sh) * f);
  return ThetaOperator(out, var_);
}

bool ThetaOperator::equal_up_to_sign(const ThetaOperator& o) const {
  if (order() != o.order()) return false;
  ThetaOperator a = normal_form(), b = o.normal_form();
  if (a.vars_ != b.vars_) {
    // Allow differing variable order as long as the sets agree.
    try {
      for (std::size_t d = 0; d < a.a_.size(); ++d)
        if (a.a_[d] != b.a_[d].with_vars(a.vars_)) return false;
      return true;
    } catch (const DomainError&) {
      return false;
    }
  }
  return a.a_ == b.a_;
}

SparsePolynomial ThetaOperator::coefficient(int d, int e) const {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (i != idx_) rest.push_back(vars_[i]);
  SparsePolynomial out(rest);
  if (d < 0 || d > order()) return out;
  for (const auto& [ex, v] : a_[static_cast<std::size_t>(d)].terms()) {
    if (ex[idx_] != e) continue;
    Exponent ne;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (i != idx_) ne.push_back(ex[i]);
    out.add_term(ne, v);
  }
  return out;
}

SparsePolynomial ThetaOperator::indicial_at_zero() const {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (i != idx_) rest.push_back(vars_[i]);
  std::vector<std::string> lv = rest;
  lv.push_back("lambda");
  SparsePolynomial q(lv);
  for (int d = 0; d <= order(); ++d) {
    SparsePolynomial c = coefficient(d, 0).with_vars(lv);
    q += c * SparsePolynomial::variable(lv, lv.size() - 1, d);
  }
  return q;
}

ThetaOperator ThetaOperator::substitute(const std::string& var, const Rational& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw DomainError("operator has no variable '" + var + "'");
  if (var == var_) throw DomainError("cannot substitute the main variable");
  std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (i != vi) rest.push_back(vars_[i]);
  std::vector<SparsePolynomial> out;
  for (const auto& c : a_) {
    SparsePolynomial s = c.substitute(vi, value);
    SparsePolynomial r(rest);
    for (const auto& [e, v] : s.terms()) {
      Exponent ne;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != vi) ne.push_back(e[i]);
      r.add_term(ne, v);
    }
    out.push_back(r);
  }
  return ThetaOperator(out, var_);
}

TruncatedSeries<Rational> ThetaOperator::apply(const TruncatedSeries<Rational>& s) const {
  if (vars_.size() != 1) throw DomainError("operator has parameters; supply an embedding");
  return apply<Rational>(s, [](const SparsePolynomial& p) { return p.constant_value(); });
}

std::string ThetaOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = order(); d >= 0; --d) {
    const auto& c = a_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (d >= 1) os << "*theta";
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

std::string factored_string(const UPolyQ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return hbk::to_string(p.lead());
  auto rr = rational_roots(p);
  Rational c = p.content();
  std::ostringstream os;
  std::vector<std::string> parts;
  // Leading factor: content times the leading coefficients of the monic
  // pieces is accounted for by printing integral linear factors.
  Rational rem = c;
  for (const auto& r : rr.roots) {
    std::string f;
    if (r.root == 0) {
      f = var;
    } else {
      Integer num = r.root.get_num(), den = r.root.get_den();
      std::string lead = den == 1 ? var : den.get_str() + "*" + var;
      f = "(" + lead + (num > 0 ? " - " : " + ") + Integer(abs(num)).get_str() + ")";
    }
    if (r.multiplicity > 1) f += "^" + std::to_string(r.multiplicity);
    parts.push_back(f);
  }
  // The primitive polynomial equals prod(den*t - num)^m * leftover (Gauss),
  // so the remaining scalar is exactly the content.
  if (rr.leftover.degree() > 0) parts.push_back("(" + rr.leftover.to_string(var) + ")");
  if (rem != 1 || parts.empty()) os << hbk::to_string(rem) << (parts.empty() ? "" : "*");
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  return os.str();
}

}  // namespace hbk
