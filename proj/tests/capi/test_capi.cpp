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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "hbk/hbk.h"

namespace {

struct Ctx {
  hbk_context* c = nullptr;
  Ctx() { REQUIRE(hbk_context_create(&c) == HBK_OK); }
  ~Ctx() { hbk_context_destroy(c); }
};

nlohmann::json take(hbk_result* r) {
  auto j = nlohmann::json::parse(hbk_result_text(r));
  hbk_result_destroy(r);
  return j;
}

}  // namespace

TEST_CASE("period through the C API") {
  Ctx x;
  hbk_result* r = nullptr;
  REQUIRE(hbk_period(x.c, 2, 5, 0, 0, &r) == HBK_OK);
  CHECK(hbk_result_ok(r) == 1);
  auto j = take(r);
  std::vector<std::string> want{"1", "2", "6", "20", "70", "252"};
  CHECK(j["coefficients"].get<std::vector<std::string>>() == want);
}

TEST_CASE("guess and kernel") {
  Ctx x;
  REQUIRE(hbk_context_set(x.c, "terms", "40") == HBK_OK);
  hbk_result* r = nullptr;
  REQUIRE(hbk_guess(x.c, 3, 0, &r) == HBK_OK);
  auto j = take(r);
  CHECK(j["order"] == 2);
  CHECK(j["factored"][2].get<std::string>().find("(8*t - 1)") != std::string::npos);
  REQUIRE(hbk_kernel(x.c, 3, 5, HBK_KERNEL_GAMMA, &r) == HBK_OK);
  auto k = take(r);
  CHECK(k[2]["gamma"].get<std::vector<std::string>>() == std::vector<std::string>{"1", "16", "10"});
}

TEST_CASE("errors map to status codes") {
  Ctx x;
  hbk_result* r = nullptr;
  CHECK(hbk_period(nullptr, 2, 5, 0, 0, &r) == HBK_E_ARGUMENT);
  CHECK(hbk_period(x.c, 0, 5, 0, 0, &r) == HBK_E_DOMAIN);
  CHECK(r == nullptr);
  CHECK(std::string(hbk_context_error(x.c)).size() > 0);
  CHECK(hbk_context_set(x.c, "no_such_key", "1") == HBK_E_ARGUMENT);
  REQUIRE(hbk_context_set(x.c, "max_support", "10") == HBK_OK);
  CHECK(hbk_period(x.c, 4, 6, 0, 1, &r) == HBK_E_RESOURCE);
  CHECK(hbk_mirror(x.c, 2, 6, 0, &r) == HBK_E_UNSUPPORTED);
  CHECK(std::string(hbk_status_string(HBK_E_RESOURCE)) == "resource limit");
}

TEST_CASE("failed checks clear the ok flag") {
  Ctx x;
  hbk_result* r = nullptr;
  REQUIRE(hbk_locus(x.c, 3, 2, HBK_LOCUS_CHECK_DISC, &r) == HBK_OK);
  CHECK(hbk_result_ok(r) == 0);
  hbk_result_destroy(r);
  REQUIRE(hbk_locus(x.c, 4, 2, HBK_LOCUS_CHECK_DISC | HBK_LOCUS_GROUP_LAW, &r) == HBK_OK);
  CHECK(hbk_result_ok(r) == 1);
  hbk_result_destroy(r);
}

TEST_CASE("plot output is deterministic") {
  Ctx x;
  REQUIRE(hbk_context_set(x.c, "plot.grid", "64") == HBK_OK);
  hbk_result *a = nullptr, *b = nullptr;
  REQUIRE(hbk_plot(x.c, 3, "1", &a) == HBK_OK);
  REQUIRE(hbk_plot(x.c, 3, "1", &b) == HBK_OK);
  CHECK(std::string(hbk_result_text(a)) == hbk_result_text(b));
  hbk_result_destroy(a);
  hbk_result_destroy(b);
}

TEST_CASE("text format and config echo") {
  Ctx x;
  REQUIRE(hbk_context_set(x.c, "format", "text") == HBK_OK);
  hbk_result* r = nullptr;
  REQUIRE(hbk_grouplaw(x.c, 3, &r) == HBK_OK);
  CHECK(std::string(hbk_result_text(r)).rfind("N: 3\n", 0) == 0);
  hbk_result_destroy(r);
  CHECK(std::string(hbk_context_config(x.c)).find("format = text") != std::string::npos);
  CHECK(std::string(hbk_version()).size() > 0);
}
