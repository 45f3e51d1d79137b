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

#include <stdexcept>
#include <string>

namespace hbk {

// Invalid input to a mathematical operation (zero polynomial, bad
// normalization, ring mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource guard tripped (support-size guard, prime budget,
// insufficient stream length).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is valid but falls outside what the algorithm handles
// (e.g. negative local exponents in a Frobenius basis).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug or a broken fixture.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hbk
