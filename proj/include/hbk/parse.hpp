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
#include <vector>

#include "hbk/polynomial.hpp"

namespace hbk {

// Polynomial expressions with + - * ^, parentheses, rational literals and
// implicit multiplication ("2t(4t+1)", "(t-1)^2 r"). Names must appear in
// `vars`; exponents are non-negative integers. Throws DomainError on bad input.
SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace hbk
