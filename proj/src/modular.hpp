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

#include <cstdint>
#include <vector>

namespace hbk::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

// p prime, a != 0 mod p
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

inline u64 from_signed(long long v, u64 p) {
  if (v >= 0) return static_cast<u64>(v) % p;
  u64 m = static_cast<u64>(-(v + 1)) % p;  // avoids overflow at LLONG_MIN
  return sub(p - 1, m, p);
}

// Deterministic list of primes just above 2^61; the i-th entry never changes.
std::vector<u64> word_primes(std::size_t count);

}  // namespace hbk::modp
