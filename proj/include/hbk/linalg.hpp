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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hbk/rational.hpp"

namespace hbk {

using VectorQ = std::vector<Rational>;
using MatrixQ = std::vector<VectorQ>;  // row major
using MatrixModP = std::vector<std::vector<std::uint64_t>>;

struct NullspaceOptions {
  enum class Mode { Auto, Exact, Modular };
  Mode mode = Mode::Auto;
  std::size_t modular_threshold = 50;  // Auto goes modular above this many rows or columns
  std::size_t max_primes = 400;        // hard cap for the modular path
};

struct NullspaceStats {
  bool modular = false;
  std::size_t primes_used = 0;
};

// Right nullspace of M. The basis is the reduced-echelon one: one vector per
// non-pivot column f, with 1 at f and 0 at the other non-pivot columns.
// Both paths return the same basis; the modular one is certified exactly.
std::vector<VectorQ> rational_nullspace(const MatrixQ& m, const NullspaceOptions& opt = {},
                                        NullspaceStats* stats = nullptr);

// In-place reduced row echelon form modulo p; returns the pivot columns.
std::vector<std::size_t> rref_mod_p(MatrixModP& a, std::uint64_t p);
std::size_t rank_mod_p(MatrixModP a, std::uint64_t p);

// Balanced rational reconstruction of a mod m; false if none within
// |n|, d <= sqrt(m/2).
bool rational_reconstruct(const Integer& a, const Integer& m, Rational* out);

}  // namespace hbk
