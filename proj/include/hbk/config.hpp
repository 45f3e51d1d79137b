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

#include "hbk/plot.hpp"

namespace hbk {

// Everything a run depends on besides the code version.
struct RunConfig {
  int terms = 0;        // series truncation; 0 lets each command choose
  int max_order = 12;   // guess bounds
  int max_degree = 64;
  int verify_extra = 10;
  int r_samples = 60;   // parametric guessing budget
  long max_support = 2000000;  // constant-term oracle guard
  std::string cache_dir;  // empty: no disk cache
  int threads = 1;
  std::string format = "json";  // json | text
  PlotConfig plot;

  // "key = value" lines; '#' starts a comment. Unknown keys and bad values
  // raise DomainError naming the line.
  static RunConfig parse(const std::string& text, RunConfig base);
  static RunConfig parse(const std::string& text) { return parse(text, RunConfig()); }
  static RunConfig load(const std::string& path, RunConfig base);
  static RunConfig load(const std::string& path) { return load(path, RunConfig()); }
  // Round-trips through parse().
  std::string to_text() const;
  // Applies $HBK_CACHE_DIR if set.
  void apply_environment();
};

}  // namespace hbk
