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

#include "hbk/polynomial.hpp"

namespace hbk {

// Res_var(f, g) by the subresultant pseudo-remainder sequence. The result is
// expressed over the same variable list with var absent. Zero input raises
// DomainError.
SparsePolynomial resultant(const SparsePolynomial& f, const SparsePolynomial& g, std::size_t var);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg_var f.
SparsePolynomial discriminant(const SparsePolynomial& f, std::size_t var);

}  // namespace hbk
