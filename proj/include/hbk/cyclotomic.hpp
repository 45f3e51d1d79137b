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

#include <string>

#include "hbk/upoly.hpp"

namespace hbk {

// N-th cyclotomic polynomial.
UPolyQ cyclotomic_polynomial(int n);

// Element of Q(zeta_N) as a residue modulo Phi_N.
class CyclotomicNumber {
 public:
  CyclotomicNumber(int n, const Rational& c = 0);
  CyclotomicNumber(int n, long c) : CyclotomicNumber(n, Rational(c)) {}
  CyclotomicNumber(int n, int c) : CyclotomicNumber(n, Rational(c)) {}
  static CyclotomicNumber zeta(int n, long power = 1);

  int order() const { return n_; }
  const UPolyQ& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }
  bool is_rational() const { return r_.degree() <= 0; }
  Rational rational_value() const;  // DomainError unless is_rational()

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a.n_ == b.n_ && a.r_ == b.r_; }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }
  CyclotomicNumber inverse() const;  // DomainError for zero
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }
  CyclotomicNumber pow(unsigned e) const;
  // zeta -> zeta^(-1)
  CyclotomicNumber conj() const;

  std::string to_string() const;

 private:
  struct Raw {};
  CyclotomicNumber(int n, UPolyQ r, Raw);
  void reduce();
  int n_;
  UPolyQ r_;
};

}  // namespace hbk
