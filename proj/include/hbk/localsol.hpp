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

#include "hbk/operator.hpp"
#include "hbk/polynomial.hpp"
#include "hbk/series.hpp"
#include "hbk/upoly.hpp"

namespace hbk {

struct LocalPoint {
  enum class Kind { Zero, Infinity, Finite };
  Kind kind = Kind::Zero;
  Rational c;  // only for Finite

  static LocalPoint zero() { return {}; }
  static LocalPoint infinity() { return {Kind::Infinity, 0}; }
  static LocalPoint at(const Rational& c);  // c == 0 gives zero()
  std::string to_string() const;
};

struct IndicialData {
  // Polynomial in the operator's other variables and "lambda".
  SparsePolynomial polynomial;
  std::vector<RootMultiplicity> roots;  // rational exponents, ascending
  SparsePolynomial leftover;            // what remains after removing the roots
  bool ordinary = false;                // the point is not singular

  std::vector<Rational> exponents() const;  // roots repeated by multiplicity
  int leftover_degree() const;               // degree of leftover in lambda
};

IndicialData indicial(const ThetaOperator& op, const LocalPoint& point);

// Sum_j phi[j] * log(t)^j / j!, exponent included in the series.
struct LogSolution {
  Rational exponent;  // valuation of the chain head
  int chain = 0;      // index into the profile
  int position = 0;   // place in the chain, equal to the log depth
  std::vector<SeriesQ> phi;
  int log_depth() const { return static_cast<int>(phi.size()) - 1; }
};

struct JordanBlock {
  Rational exponent;
  int size = 0;
  friend bool operator==(const JordanBlock& a, const JordanBlock& b) {
    return a.exponent == b.exponent && a.size == b.size;
  }
};
using JordanProfile = std::vector<JordanBlock>;

// Full basis at t = 0 for an operator over Q in one variable. Chains appear
// in profile order, each from head (position 0) upward.
std::vector<LogSolution> frobenius_basis(const ThetaOperator& op, int T, JordanProfile* profile = nullptr);
JordanProfile jordan_profile(const ThetaOperator& op);

// Operator applied to a log solution, as series per log power (order T - E).
std::vector<SeriesQ> apply_log(const ThetaOperator& op, const std::vector<SeriesQ>& phi);
bool annihilates(const ThetaOperator& op, const LogSolution& s);

// Chain at exponent 0 by the epsilon method: psi_0..psi_{length-1} with
// y_k = Sum_j psi_{k-j} log^j/j!, psi_0(0) = 1, psi_k(0) = 0. The constant
// parts of the operator must be rational. UnsupportedError if a higher
// exponent makes the chain logarithmically entangled.
std::vector<SeriesQ> frobenius_chain(const ThetaOperator& op, int length, int T);
std::vector<SeriesQr> frobenius_chain(const ThetaOperator& op, int length, int T, const std::string& param);

}  // namespace hbk
