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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hbk {

// Exact scalars are GMP values. mpq_class keeps itself canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(long n);
// (j_1 + ... + j_m)! / (j_1! ... j_m!)
Integer multinomial(std::span<const long> parts);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

// Accepts "n", "-n", "n/d" (decimal). Throws DomainError on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Least common multiple of denominators / gcd of numerators helpers used by
// the content computations.
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// n mod p for a word-size prime p, result in [0, p).
std::uint64_t mod_u64(const Integer& n, std::uint64_t p);
// q mod p; throws DomainError if p divides the denominator.
std::uint64_t mod_u64(const Rational& q, std::uint64_t p);

}  // namespace hbk
