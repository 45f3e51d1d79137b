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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hbk/rational.hpp"

namespace hbk {

using Exponent = std::vector<int>;

// Graded lexicographic order: total degree first, then the first differing
// exponent decides (larger exponent of an earlier variable is larger).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Multivariate (Laurent) polynomial with rational coefficients. Exponents may
// be negative. Terms iterate in ascending graded-lex order; zero coefficients
// are never stored.
//
// A polynomial with no variables is a constant and combines with any other
// polynomial; otherwise both operands of a binary operation must carry the
// same ordered variable list.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  SparsePolynomial(std::vector<std::string> vars, const Rational& c);
  SparsePolynomial(const Rational& c);  // NOLINT: constants convert implicitly
  SparsePolynomial(long c) : SparsePolynomial(Rational(c)) {}  // NOLINT

  static SparsePolynomial variable(const std::vector<std::string>& vars, std::size_t index, int power = 1);
  static SparsePolynomial monomial(const std::vector<std::string>& vars, Exponent e, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient at exponent 0
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  // Same polynomial expressed over a (super)set of variables, new variables
  // get exponent 0. Throws DomainError if a used variable is missing.
  SparsePolynomial with_vars(const std::vector<std::string>& vars) const;
  // Drops variables that never occur with a nonzero exponent.
  SparsePolynomial compact_vars() const;

  long total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  std::pair<Exponent, Rational> leading_term() const;  // grlex-largest

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rational& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(SparsePolynomial a, long c) { return a *= Rational(c); }
  friend SparsePolynomial operator*(SparsePolynomial a, int c) { return a *= Rational(c); }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);
  friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

  SparsePolynomial pow(unsigned e) const;
  SparsePolynomial derivative(std::size_t var) const;
  // x_var * d/dx_var
  SparsePolynomial euler_derivative(std::size_t var) const;

  // Multiplies by the monomial x^shift (shift may be negative).
  SparsePolynomial shifted(const Exponent& shift) const;

  // Replace variable `var` by a rational value.
  SparsePolynomial substitute(std::size_t var, const Rational& value) const;
  // Replace variable `var` by a polynomial over the same variable list.
  SparsePolynomial substitute(std::size_t var, const SparsePolynomial& value) const;
  // Evaluate fully at rationals (one per variable).
  Rational evaluate(const std::vector<Rational>& point) const;

  // Generic evaluation in a commutative ring R given images of the variables
  // (nonnegative exponents only) and a scalar embedding.
  template <typename R, typename Embed>
  R evaluate_in(const std::vector<R>& point, Embed embed, R zero) const;

  // Laurent constant term with respect to the listed variables: the sum of
  // terms whose exponents vanish in all of them, with those variables removed.
  SparsePolynomial constant_term_in(const std::vector<std::size_t>& torus_vars) const;

  // Map exponents e[var] -> e[var] / k; requires divisibility
  // (InvariantViolation otherwise).
  SparsePolynomial divide_exponents(std::size_t var, int k) const;

  // Rational content: c with p = c * primitive, primitive integral with
  // coprime coefficients, sign of c chosen so that the leading (grlex-largest)
  // coefficient of the primitive part is positive.
  Rational content() const;
  SparsePolynomial primitive_part() const;
  bool has_integer_coefficients() const;

  // Exact division in Q[vars]; throws DomainError when b does not divide a.
  static SparsePolynomial exact_divide(const SparsePolynomial& a, const SparsePolynomial& b);
  // Returns true and sets quotient if b divides a.
  static bool divides(const SparsePolynomial& b, const SparsePolynomial& a, SparsePolynomial* quotient);

  // Coefficients of the powers of `var`: result[k] is the coefficient of
  // var^(k + min_degree) as a polynomial over the remaining variables (same
  // variable list, exponent of var zeroed).
  std::vector<SparsePolynomial> coefficients_in(std::size_t var) const;

  std::string to_string() const;
  std::size_t var_index(const std::string& name) const;  // throws DomainError

 private:
  void require_compatible(const SparsePolynomial& o, std::vector<std::string>* unified) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

template <typename R, typename Embed>
R SparsePolynomial::evaluate_in(const std::vector<R>& point, Embed embed, R zero) const {
  R acc = zero;
  for (const auto& [e, c] : terms_) {
    R term = embed(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    acc = acc + term;
  }
  return acc;
}

}  // namespace hbk
