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

#include <cmath>

#include "hbk/config.hpp"
#include "hbk/errors.hpp"
#include "hbk/plot.hpp"

using namespace hbk;

TEST_CASE("run config: parse, defaults and round trip") {
  RunConfig c = RunConfig::parse("# comment\nterms = 40\n  max_order=8 # trailing\nformat = text\nplot.x0 = -1/2\n");
  CHECK(c.terms == 40);
  CHECK(c.max_order == 8);
  CHECK(c.format == "text");
  CHECK(c.plot.window.x0 == Rational(-1, 2));
  CHECK(c.max_degree == RunConfig().max_degree);
  RunConfig back = RunConfig::parse(c.to_text());
  CHECK(back.to_text() == c.to_text());
  CHECK_THROWS_AS(RunConfig::parse("colour = red"), DomainError);
  CHECK_THROWS_AS(RunConfig::parse("terms"), DomainError);
  CHECK_THROWS_AS(RunConfig::parse("terms = -3"), DomainError);
  CHECK_THROWS_AS(RunConfig::parse("plot.grid = 8"), DomainError);
  CHECK_THROWS_AS(RunConfig::parse("format = xml"), DomainError);
  CHECK_THROWS_AS(RunConfig::load("/nonexistent/hbk.conf"), DomainError);
}

TEST_CASE("contour of a circle") {
  SparsePolynomial f(std::vector<std::string>{"x", "y"});
  f.add_term({2, 0}, 1);
  f.add_term({0, 2}, 1);
  f.add_term({0, 0}, -1);
  PlotConfig cfg;
  cfg.window = {-2, 2, -2, 2};
  cfg.grid = 64;
  auto paths = contour(f, cfg);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].closed);
  for (const auto& [x, y] : paths[0].pts) CHECK(std::abs(std::hypot(x, y) - 1) < 0.01);
  CHECK(has_closed_component_in(paths, -1.1, 1.1, -1.1, 1.1));
  CHECK_FALSE(has_closed_component_in(paths, -0.9, 1.1, -1.1, 1.1));
  cfg.grid = 16;
  CHECK_THROWS_AS(contour(f, cfg), DomainError);
}

TEST_CASE("Kallen conic in the chart z = 1") {
  PlotConfig cfg;
  cfg.grid = 128;
  auto paths = locus_contour(2, 0, cfg);
  REQUIRE(!paths.empty());
  // Points on x^2 + y^2 + 1 - 2xy - 2x - 2y = 0 up to grid resolution.
  for (const auto& p : paths)
    for (const auto& [x, y] : p.pts) CHECK(std::abs(x * x + y * y + 1 - 2 * x * y - 2 * x - 2 * y) < 0.2);
}

TEST_CASE("isolated double point opens into an oval") {
  // Grid-sign oracle: Delta_3(x, y, 1) - 1 is negative at (1, 1) and positive
  // on a ring around it.
  auto f = locus_chart(3, 1);
  CHECK(f.evaluate({Rational(1), Rational(1)}) < 0);
  for (int k = 0; k < 16; ++k) {
    double a = 2 * std::acos(-1.0) * k / 16;
    Rational x(static_cast<long>(std::lround(1000 * (1 + 0.7 * std::cos(a)))), 1000);
    Rational y(static_cast<long>(std::lround(1000 * (1 + 0.7 * std::sin(a)))), 1000);
    CHECK(f.evaluate({x, y}) > 0);
  }
  PlotConfig cfg;
  auto paths = locus_contour(3, 1, cfg);
  CHECK(has_closed_component_in(paths, 0.3, 1.7, 0.3, 1.7));
  // With a smaller deformation the oval shrinks toward [1:1:1].
  CHECK(has_closed_component_in(locus_contour(3, Rational(1, 20), cfg), 0.8, 1.2, 0.8, 1.2));
}

TEST_CASE("plots are byte-identical") {
  PlotConfig cfg;
  cfg.grid = 96;
  for (int N : {2, 3, 5}) {
    std::string a = plot_locus(N, 1, cfg), b = plot_locus(N, 1, cfg);
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
  }
}
