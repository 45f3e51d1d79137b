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

#include "hbk/polynomial.hpp"

namespace hbk {

// scalar * numerator(y, z) / (z - y)^e with an integral primitive numerator
// (positive grlex-leading coefficient) that is coprime to z - y whenever
// e > 0. Zero is (0, e = 0, scalar 0).
class ShapedRational {
 public:
  ShapedRational();
  ShapedRational(const Rational& c);  // NOLINT
  ShapedRational(long c) : ShapedRational(Rational(c)) {}  // NOLINT
  // p over (y, z) (variables y, z in that order, or a constant).
  ShapedRational(const SparsePolynomial& p, int e, const Rational& scalar = 1);

  static const std::vector<std::string>& vars();  // {"y", "z"}
  static SparsePolynomial z_minus_y();

  const SparsePolynomial& numerator() const { return num_; }
  int denominator_exponent() const { return e_; }
  const Rational& scalar() const { return scalar_; }
  bool is_zero() const { return scalar_ == 0; }
  // scalar * numerator, i.e. the full numerator over (z - y)^e.
  SparsePolynomial full_numerator() const;

  ShapedRational operator-() const;
  friend ShapedRational operator+(const ShapedRational& a, const ShapedRational& b);
  friend ShapedRational operator-(const ShapedRational& a, const ShapedRational& b) { return a + (-b); }
  friend ShapedRational operator*(const ShapedRational& a, const ShapedRational& b);
  friend bool operator==(const ShapedRational& a, const ShapedRational& b);
  friend bool operator!=(const ShapedRational& a, const ShapedRational& b) { return !(a == b); }

  ShapedRational d_dy() const;
  ShapedRational d_dz() const;
  ShapedRational theta_y() const;
  ShapedRational theta_z() const;
  // Swap the roles of y and z.
  ShapedRational swapped() const;

  std::string to_string() const;

 private:
  void canonicalize();
  SparsePolynomial num_;
  int e_ = 0;
  Rational scalar_;
};

}  // namespace hbk
