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
#include <string>
#include <vector>

#include <json.hpp>

#include "hbk/operator.hpp"
#include "hbk/polynomial.hpp"

namespace hbk::fixtures {

using json = nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes);

// $HBK_FIXTURE_DIR, else the source tree's data/fixtures.
std::string directory();

// Parsed file, after checking its FNV-1a-64 digest against MANIFEST.
// Throws InvariantViolation on a digest mismatch or a missing entry.
const json& load(const std::string& name);

// Digest lines "<16 hex digits>  <file>" for every *.json in dir, sorted.
std::string manifest_text(const std::string& dir);
// Combined digest of MANIFEST itself (used in cache keys).
std::uint64_t manifest_digest();

SparsePolynomial poly(const json& text, const std::vector<std::string>& vars);
std::vector<SparsePolynomial> polys(const json& list, const std::vector<std::string>& vars);
// Theta-form coefficient list a_0..a_D.
ThetaOperator theta_operator(const json& list, const std::vector<std::string>& vars, const std::string& main_var);

}  // namespace hbk::fixtures
