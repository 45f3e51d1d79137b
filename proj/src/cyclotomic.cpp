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

#include "hbk/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hbk/errors.hpp"

namespace hbk {

UPolyQ cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial of order < 1");
  static std::mutex mu;
  static std::map<int, UPolyQ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  UPolyQ p = UPolyQ::x(n) - UPolyQ(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    UPolyQ q;
    UPolyQ::divmod(p, cyclotomic_polynomial(d), &q, nullptr);
    p = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

CyclotomicNumber::CyclotomicNumber(int n, const Rational& c) : n_(n), r_(c) {
  if (n < 1) throw DomainError("cyclotomic order < 1");
}

CyclotomicNumber::CyclotomicNumber(int n, UPolyQ r, Raw) : n_(n), r_(std::move(r)) { reduce(); }

void CyclotomicNumber::reduce() {
  UPolyQ phi = cyclotomic_polynomial(n_);
  if (r_.degree() >= phi.degree()) UPolyQ::divmod(r_, phi, nullptr, &r_);
}

CyclotomicNumber CyclotomicNumber::zeta(int n, long power) {
  long k = ((power % n) + n) % n;
  return CyclotomicNumber(n, UPolyQ::x(static_cast<int>(k)), CyclotomicNumber::Raw{});
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return r_.coeff(0);
}

static void same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) throw DomainError("cyclotomic numbers of different orders");
}

CyclotomicNumber CyclotomicNumber::operator-() const { return CyclotomicNumber(n_, -r_, CyclotomicNumber::Raw{}); }

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  same_order(a, b);
  return CyclotomicNumber(a.n_, a.r_ + b.r_, CyclotomicNumber::Raw{});
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  same_order(a, b);
  return CyclotomicNumber(a.n_, a.r_ - b.r_, CyclotomicNumber::Raw{});
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  same_order(a, b);
  return CyclotomicNumber(a.n_, a.r_ * b.r_, CyclotomicNumber::Raw{});
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in a cyclotomic field");
  // Extended Euclid: s*r + t*phi = 1.
  UPolyQ a = cyclotomic_polynomial(n_), b = r_;
  UPolyQ s0(0), s1(1);  // coefficients of r_
  while (b.degree() > 0) {
    UPolyQ q, rem;
    UPolyQ::divmod(a, b, &q, &rem);
    a = std::move(b);
    b = std::move(rem);
    UPolyQ s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (b.is_zero()) throw InvariantViolation("cyclotomic polynomial is not irreducible");
  return CyclotomicNumber(n_, s1 * UPolyQ(1 / b.lead()), CyclotomicNumber::Raw{});
}

CyclotomicNumber CyclotomicNumber::pow(unsigned e) const {
  CyclotomicNumber r(n_, Rational(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  CyclotomicNumber acc(n_, Rational(0));
  CyclotomicNumber zinv = zeta(n_, -1);
  CyclotomicNumber pw(n_, Rational(1));
  for (int k = 0; k <= r_.degree(); ++k) {
    acc = acc + pw * CyclotomicNumber(n_, r_.coeff(k), CyclotomicNumber::Raw{});
    pw = pw * zinv;
  }
  return acc;
}

std::string CyclotomicNumber::to_string() const { return r_.to_string("zeta"); }

}  // namespace hbk
