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

namespace hbk {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // failures, semicolon separated
  double seconds = 0;
  double budget = 0;   // seconds
};

struct AcceptanceOptions {
  bool include_n9 = false;  // optional order-12 operator in criterion 2
};

constexpr int kCriteria = 11;

// One criterion, 1..kCriteria. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
// "[PASS] 3 Monodromy profiles (0.4 s / 60 s)" plus the detail on failure.
std::string format_result(const CriterionResult& r);

}  // namespace hbk
