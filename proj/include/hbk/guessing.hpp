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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbk/linalg.hpp"
#include "hbk/operator.hpp"
#include "hbk/periods.hpp"
#include "hbk/series.hpp"

namespace hbk {

struct GuessConfig {
  enum class Strategy {
    OrderFirst,    // every order D is settled before D+1 (minimal order, then degree)
    AntiDiagonal,  // increasing D+E, ties by smaller D
  };
  int max_order = 12;
  int max_degree = 64;
  int verify_extra = 10;      // V
  std::size_t terms = 0;      // coefficients drawn from a stream; 0 picks a default
  Strategy strategy = Strategy::OrderFirst;
  NullspaceOptions nullspace;
};

// Diagnostics of the last successful or failed search.
struct GuessReport {
  int order = -1, degree = -1;
  std::size_t rows = 0, unknowns = 0, nullity = 0;
  std::size_t cells_tested = 0;
  NullspaceStats nullspace;
};

// The result keeps order T - E (E the operator's degree in t).
SeriesQ apply_operator(const ThetaOperator& op, const SeriesQ& s);
// For coefficients in Q[r]: the operator may involve t and r only.
SeriesQr apply_operator(const ThetaOperator& op, const SeriesQr& s, const std::string& param = "r");

// Minimal operator in normal form annihilating the coefficients, or nullopt.
// The operator's variable is `var`.
std::optional<ThetaOperator> guess_operator(const std::vector<Rational>& coeffs, const GuessConfig& cfg,
                                            GuessReport* report = nullptr, const std::string& var = "t");
std::optional<ThetaOperator> guess_operator(CoefficientStream& stream, const GuessConfig& cfg,
                                            GuessReport* report = nullptr);

// Family of rational streams indexed by r; the result has variables (t, r).
using StreamFamily = std::function<std::vector<Rational>(const Rational& r, std::size_t terms)>;

struct ParametricConfig {
  GuessConfig base;
  std::vector<Rational> r_points;  // empty: primes 2, 3, 5, 7, ...
  std::size_t max_points = 60;
  std::size_t held_out = 2;
};

struct ParametricReport {
  GuessReport first;
  std::size_t points_used = 0, points_discarded = 0;
  int r_degree = 0;
};

// Throws UnsupportedError when interpolation does not stabilize in budget.
std::optional<ThetaOperator> guess_parametric(const StreamFamily& family, const ParametricConfig& cfg,
                                              ParametricReport* report = nullptr);

// Default stream family for the deformed potential.
StreamFamily deformed_family(int N);

// Rational function n/d through the points (x_i, y_i) with deg n + deg d < k,
// via Newton interpolation and a truncated Euclidean run. False if the
// reconstruction has a pole at a sample point.
bool rational_interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y, UPolyQ* num, UPolyQ* den);

}  // namespace hbk
