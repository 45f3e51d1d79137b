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

#include "modular.hpp"

#include <gmpxx.h>

#include <mutex>

namespace hbk::modp {

std::vector<u64> word_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  mpz_class cur = primes.empty() ? mpz_class(mpz_class(1) << 61) : mpz_class(static_cast<unsigned long>(primes.back()));
  while (primes.size() < count) {
    mpz_nextprime(cur.get_mpz_t(), cur.get_mpz_t());
    primes.push_back(cur.get_ui());
  }
  return {primes.begin(), primes.begin() + static_cast<long>(count)};
}

}  // namespace hbk::modp
