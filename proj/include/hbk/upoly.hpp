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

#include <initializer_list>
#include <string>
#include <vector>

#include "hbk/polynomial.hpp"
#include "hbk/rational.hpp"

namespace hbk {

// Dense univariate polynomial over Q, coefficients low degree first, no
// trailing zeros. Also used as the coefficient ring Q[r].
class UPolyQ {
 public:
  UPolyQ() = default;
  UPolyQ(const Rational& c);  // NOLINT
  UPolyQ(long c) : UPolyQ(Rational(c)) {}  // NOLINT
  explicit UPolyQ(std::vector<Rational> coeffs);
  UPolyQ(std::initializer_list<Rational> coeffs) : UPolyQ(std::vector<Rational>(coeffs)) {}
  static UPolyQ x(int power = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational lead() const;

  UPolyQ operator-() const;
  UPolyQ& operator+=(const UPolyQ& o);
  UPolyQ& operator-=(const UPolyQ& o);
  UPolyQ& operator*=(const UPolyQ& o);
  friend UPolyQ operator+(UPolyQ a, const UPolyQ& b) { return a += b; }
  friend UPolyQ operator-(UPolyQ a, const UPolyQ& b) { return a -= b; }
  friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b);
  friend bool operator==(const UPolyQ& a, const UPolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPolyQ& a, const UPolyQ& b) { return a.c_ != b.c_; }

  // Euclidean division; throws DomainError for a zero divisor.
  static void divmod(const UPolyQ& a, const UPolyQ& b, UPolyQ* q, UPolyQ* r);
  static UPolyQ gcd(UPolyQ a, UPolyQ b);  // monic, gcd(0,0) = 0

  UPolyQ derivative() const;
  UPolyQ monic() const;
  UPolyQ pow(unsigned e) const;
  UPolyQ taylor_shift(const Rational& c) const;  // p(x + c)
  UPolyQ compose(const UPolyQ& inner) const;
  Rational operator()(const Rational& x) const;
  UPolyQ squarefree_part() const;  // monic
  Rational content() const;        // positive lead in primitive part
  UPolyQ primitive() const;

  SparsePolynomial to_sparse(const std::string& var) const;
  // p must involve at most the named variable.
  static UPolyQ from_sparse(const SparsePolynomial& p, const std::string& var);
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Number of distinct real roots in (lo, hi]; nullptr bounds mean infinite.
long sturm_count(const UPolyQ& p, const Rational* lo = nullptr, const Rational* hi = nullptr);

struct RootMultiplicity {
  Rational root;
  int multiplicity;
};
// Rational roots with multiplicities, plus the leftover factor that has no
// rational root. Candidate enumeration is capped by max_divisors.
struct RationalRootResult {
  std::vector<RootMultiplicity> roots;  // ascending
  UPolyQ leftover;                      // primitive
};
RationalRootResult rational_roots(const UPolyQ& p, std::size_t max_divisors = 200000);

}  // namespace hbk
