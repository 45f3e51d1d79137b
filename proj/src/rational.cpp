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

#include "hbk/rational.hpp"

#include "hbk/errors.hpp"
#include "modular.hpp"

namespace hbk {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer multinomial(std::span<const long> parts) {
  Integer r = 1;
  long total = 0;
  for (long j : parts) {
    if (j < 0) return 0;
    total += j;
    r *= binomial(total, j);
  }
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return rpow(Rational(1) / base, -e);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
             ipow(base.get_den(), static_cast<unsigned long>(e)));
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw DomainError("empty integer literal");
  Integer z;
  if (z.set_str(s, 10) != 0) throw DomainError("malformed integer literal '" + std::string(text) + "'");
  return z;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer n = parse_integer(text.substr(0, slash));
  Integer d = parse_integer(text.substr(slash + 1));
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t p) {
  return mpz_fdiv_ui(n.get_mpz_t(), p);
}

std::uint64_t mod_u64(const Rational& q, std::uint64_t p) {
  std::uint64_t d = mod_u64(q.get_den(), p);
  if (d == 0) throw DomainError("denominator vanishes modulo prime");
  return modp::mul(mod_u64(q.get_num(), p), modp::inv(d, p), p);
}

}  // namespace hbk
