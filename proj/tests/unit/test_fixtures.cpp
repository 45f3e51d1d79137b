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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/parse.hpp"

using namespace hbk;

TEST_CASE("polynomial parser") {
  std::vector<std::string> v{"t", "r"};
  auto p = parse_polynomial("2t(4t + 1)", v);
  CHECK(p == parse_polynomial("8*t^2 + 2*t", v));
  CHECK(parse_polynomial("(r - 1)^2 t", v) == parse_polynomial("r^2 t - 2 r t + t", v));
  CHECK(parse_polynomial("-(r + 1)/15 (7r^2)", v) == parse_polynomial("-7/15 r^3 - 7/15 r^2", v));
  CHECK(parse_polynomial("0", v).is_zero());
  CHECK_THROWS_AS(parse_polynomial("2q", v), DomainError);
  CHECK_THROWS_AS(parse_polynomial("(t", v), DomainError);
  CHECK_THROWS_AS(parse_polynomial("t/r", v), DomainError);
}

TEST_CASE("fixture manifest is current") {
  std::ifstream in(fixtures::directory() + "/MANIFEST");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == fixtures::manifest_text(fixtures::directory()));
  CHECK(fixtures::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fixtures::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  for (const char* f : {"deformed_family.json", "diagonal_operators.json", "kernel_tables.json", "loci.json",
                        "mirror_maps.json", "monodromy.json", "order_table.json", "pf3.json"})
    CHECK_NOTHROW(fixtures::load(f));
}
