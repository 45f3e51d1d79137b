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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hbk/polynomial.hpp"
#include "hbk/series.hpp"
#include "hbk/upoly.hpp"

namespace hbk {

// Sum_d a_d * theta^d with theta = t d/dt, t a distinguished variable of the
// coefficient polynomials. Coefficients share one variable list.
class ThetaOperator {
 public:
  ThetaOperator(std::vector<SparsePolynomial> coeffs, std::string main_var);

  // Sum_i p_i (d/dt)^i  ->  theta form, multiplied by the smallest power of t
  // that keeps coefficients polynomial.
  static ThetaOperator from_d_form(const std::vector<SparsePolynomial>& p, const std::string& main_var);
  // p_i = Sum_d a_d S(d, i) t^i
  std::vector<SparsePolynomial> to_d_form() const;

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const std::vector<SparsePolynomial>& coeffs() const { return a_; }
  const SparsePolynomial& coeff(int d) const { return a_.at(static_cast<std::size_t>(d)); }
  const std::string& main_var() const { return var_; }
  std::size_t main_index() const { return idx_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int degree() const;  // max degree in the main variable

  // Common power of t removed, primitive integral coefficients, first nonzero
  // coefficient of a_D in ascending graded-lex order positive.
  ThetaOperator normal_form() const;
  bool equal_up_to_sign(const ThetaOperator& o) const;
  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
    return a.var_ == b.var_ && a.vars_ == b.vars_ && a.a_ == b.a_;
  }

  // Q_0(lambda) = Sum_d [t^0]a_d lambda^d as a polynomial in lambda over the
  // remaining variables (variable "lambda" appended).
  SparsePolynomial indicial_at_zero() const;

  // a_d evaluated at a value of a non-main variable.
  ThetaOperator substitute(const std::string& var, const Rational& value) const;

  // [t^e] a_d with the main variable removed.
  SparsePolynomial coefficient(int d, int e) const;

  // Action on a series: [t^k] = Sum_{d,e} a_{d,e} (k-e)^d c_{k-e}. The result
  // keeps order T - E (E = degree()). `embed` maps a coefficient polynomial
  // (main variable removed) into R.
  template <typename R>
  TruncatedSeries<R> apply(const TruncatedSeries<R>& s, const std::function<R(const SparsePolynomial&)>& embed) const;

  TruncatedSeries<Rational> apply(const TruncatedSeries<Rational>& s) const;

  std::string to_string() const;

 private:
  std::vector<SparsePolynomial> a_;
  std::string var_;
  std::vector<std::string> vars_;
  std::size_t idx_ = 0;
};

Integer stirling2(int n, int k);
Integer stirling1_signed(int n, int k);

// Human-readable factorization of a univariate polynomial: content, powers
// of the variable, linear factors from rational roots, and the rest.
std::string factored_string(const UPolyQ& p, const std::string& var);

template <typename R>
TruncatedSeries<R> ThetaOperator::apply(const TruncatedSeries<R>& s,
                                        const std::function<R(const SparsePolynomial&)>& embed) const {
  int E = degree();
  int T = s.order() - E;
  if (T < 0) throw DomainError("series shorter than the operator degree");
  // Embedded coefficients per (d, e).
  std::vector<std::vector<R>> emb(a_.size());
  std::vector<std::vector<bool>> nz(a_.size());
  for (std::size_t d = 0; d < a_.size(); ++d)
    for (int e = 0; e <= E; ++e) {
      SparsePolynomial c = coefficient(static_cast<int>(d), e);
      nz[d].push_back(!c.is_zero());
      emb[d].push_back(c.is_zero() ? RingTraits<R>::zero() : embed(c));
    }
  TruncatedSeries<R> out(s.var(), T);
  for (int k = 0; k <= T; ++k) {
    R acc = RingTraits<R>::zero();
    for (int e = 0; e <= std::min(E, k); ++e) {
      const R& c = s[k - e];
      if (RingTraits<R>::is_zero(c)) continue;
      Rational pw = 1;
      for (std::size_t d = 0; d < a_.size(); ++d) {
        if (nz[d][static_cast<std::size_t>(e)]) acc = acc + RingTraits<R>::scale(emb[d][static_cast<std::size_t>(e)] * c, pw);
        pw *= (k - e);
      }
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace hbk
