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

#include "hbk/shaped.hpp"

#include "hbk/errors.hpp"

namespace hbk {

const std::vector<std::string>& ShapedRational::vars() {
  static const std::vector<std::string> v{"y", "z"};
  return v;
}

SparsePolynomial ShapedRational::z_minus_y() {
  return SparsePolynomial::variable(vars(), 1) - SparsePolynomial::variable(vars(), 0);
}

ShapedRational::ShapedRational() : num_(vars()), scalar_(0) {}

ShapedRational::ShapedRational(const Rational& c) : num_(vars(), c == 0 ? Rational(0) : Rational(1)), scalar_(c) {}

ShapedRational::ShapedRational(const SparsePolynomial& p, int e, const Rational& scalar)
    : num_(p.with_vars(vars())), e_(e), scalar_(scalar) {
  if (e < 0) throw DomainError("negative (z - y) exponent");
  canonicalize();
}

void ShapedRational::canonicalize() {
  if (scalar_ == 0 || num_.is_zero()) {
    num_ = SparsePolynomial(vars());
    e_ = 0;
    scalar_ = 0;
    return;
  }
  Rational c = num_.content();
  if (c != 1) {
    num_ *= Rational(1) / c;
    scalar_ *= c;
  }
  if (e_ == 0) return;
  SparsePolynomial zy = z_minus_y();
  SparsePolynomial q;
  // Cancel (z - y) while the numerator vanishes on the diagonal.
  while (e_ > 0 && num_.substitute(1, SparsePolynomial::variable(vars(), 0)).is_zero()) {
    q = SparsePolynomial::exact_divide(num_, zy);
    num_ = std::move(q);
    --e_;
  }
  Rational c2 = num_.content();
  if (c2 != 1) {
    num_ *= Rational(1) / c2;
    scalar_ *= c2;
  }
}

SparsePolynomial ShapedRational::full_numerator() const { return num_ * scalar_; }

ShapedRational ShapedRational::operator-() const {
  ShapedRational r = *this;
  r.scalar_ = -r.scalar_;
  return r;
}

ShapedRational operator+(const ShapedRational& a, const ShapedRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int e = std::max(a.e_, b.e_);
  SparsePolynomial zy = ShapedRational::z_minus_y();
  SparsePolynomial na = a.full_numerator(), nb = b.full_numerator();
  if (e > a.e_) na *= zy.pow(static_cast<unsigned>(e - a.e_));
  if (e > b.e_) nb *= zy.pow(static_cast<unsigned>(e - b.e_));
  return ShapedRational(na + nb, e);
}

ShapedRational operator*(const ShapedRational& a, const ShapedRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ShapedRational r;
  r.num_ = a.num_ * b.num_;
  r.e_ = a.e_ + b.e_;
  r.scalar_ = a.scalar_ * b.scalar_;
  // Both numerators are coprime to (z - y), so is the product; content of a
  // product of primitive polynomials is 1 (Gauss), sign may need fixing.
  r.canonicalize();
  return r;
}

bool operator==(const ShapedRational& a, const ShapedRational& b) {
  return a.e_ == b.e_ && a.scalar_ == b.scalar_ && a.num_ == b.num_;
}

ShapedRational ShapedRational::d_dz() const {
  if (is_zero()) return {};
  // d/dz (P / (z-y)^e) = (P_z (z-y) - e P) / (z-y)^(e+1)
  SparsePolynomial n = num_.derivative(1) * z_minus_y() - num_ * Rational(e_);
  return ShapedRational(n, e_ + 1, scalar_);
}

ShapedRational ShapedRational::d_dy() const {
  if (is_zero()) return {};
  // d/dy (P / (z-y)^e) = (P_y (z-y) + e P) / (z-y)^(e+1)
  SparsePolynomial n = num_.derivative(0) * z_minus_y() + num_ * Rational(e_);
  return ShapedRational(n, e_ + 1, scalar_);
}

ShapedRational ShapedRational::theta_z() const {
  ShapedRational d = d_dz();
  return d * ShapedRational(SparsePolynomial::variable(vars(), 1), 0);
}

ShapedRational ShapedRational::theta_y() const {
  ShapedRational d = d_dy();
  return d * ShapedRational(SparsePolynomial::variable(vars(), 0), 0);
}

ShapedRational ShapedRational::swapped() const {
  if (is_zero()) return {};
  SparsePolynomial p(vars());
  for (const auto& [ex, c] : num_.terms()) p.add_term({ex[1], ex[0]}, c);
  // (y - z)^e = (-1)^e (z - y)^e
  return ShapedRational(p, e_, e_ % 2 ? Rational(-scalar_) : scalar_);
}

std::string ShapedRational::to_string() const {
  if (is_zero()) return "0";
  std::string s = "(" + full_numerator().to_string() + ")";
  if (e_ > 0) s += "/(z - y)^" + std::to_string(e_);
  return s;
}

}  // namespace hbk
