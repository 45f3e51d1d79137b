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

// Prints one PASS/FAIL line per acceptance criterion. Exit status is 0 iff
// every selected criterion passes.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hbk/acceptance.hpp"

int main(int argc, char** argv) {
  hbk::AcceptanceOptions opt;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--n9") {
      opt.include_n9 = true;
    } else {
      int id = std::atoi(a.c_str());
      if (id < 1 || id > hbk::kCriteria) {
        std::fprintf(stderr, "usage: %s [--n9] [criterion ...]\n", argv[0]);
        return 2;
      }
      ids.push_back(id);
    }
  }
  if (ids.empty())
    for (int i = 1; i <= hbk::kCriteria; ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    auto r = hbk::run_criterion(id, opt);
    std::printf("%s\n", hbk::format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed ? 1 : 0;
}
