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

struct PlotWindow {
  Rational x0 = -1, x1 = 4, y0 = -1, y1 = 4;
};

struct PlotConfig {
  PlotWindow window;
  int grid = 256;  // cells per side, at least 32
  int size = 512;  // SVG viewport in px
};

struct Polyline {
  std::vector<std::pair<double, double>> pts;  // chart coordinates
  bool closed = false;
  std::size_t first_cell = 0;  // row-major index of the starting cell
};

// Zero set of f(x, y) on the grid by marching squares with linear
// interpolation. Saddles are resolved by the value at the cell center.
// Paths are ordered by first_cell.
std::vector<Polyline> contour(const SparsePolynomial& f, const PlotConfig& cfg);

// Delta_N(x, y, 1) - eps.
SparsePolynomial locus_chart(int N, const Rational& eps);
std::vector<Polyline> locus_contour(int N, const Rational& eps, const PlotConfig& cfg);
std::string plot_locus(int N, const Rational& eps, const PlotConfig& cfg = {});

// A closed path lying inside [a, b] x [c, d].
bool has_closed_component_in(const std::vector<Polyline>& paths, double a, double b, double c, double d);

}  // namespace hbk
