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

#include <algorithm>
#include <string>
#include <vector>

#include "hbk/errors.hpp"
#include "hbk/rational.hpp"
#include "hbk/upoly.hpp"

namespace hbk {

// Coefficient ring hooks. A ring must support +, -, *, == and these.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational scale(const Rational& a, const Rational& s) { return a * s; }
  static Rational inverse(const Rational& a) {
    if (a == 0) throw DomainError("series reciprocal needs a nonzero constant term");
    return 1 / a;
  }
  static bool is_one(const Rational& a) { return a == 1; }
};

template <>
struct RingTraits<UPolyQ> {
  static UPolyQ zero() { return {}; }
  static UPolyQ one() { return UPolyQ(1); }
  static bool is_zero(const UPolyQ& a) { return a.is_zero(); }
  static UPolyQ scale(const UPolyQ& a, const Rational& s) { return a * UPolyQ(s); }
  static UPolyQ inverse(const UPolyQ& a) {
    if (a.degree() != 0) throw DomainError("series reciprocal needs a unit constant term");
    return UPolyQ(1 / a.lead());
  }
  static bool is_one(const UPolyQ& a) { return a == UPolyQ(1); }
};

// Power series in one variable truncated at order T: coefficients c_0..c_T.
template <typename R>
class TruncatedSeries {
  using Tr = RingTraits<R>;

 public:
  TruncatedSeries() : TruncatedSeries("t", 0) {}
  TruncatedSeries(std::string var, int order) : var_(std::move(var)), c_(static_cast<std::size_t>(checked(order)) + 1, Tr::zero()) {}
  TruncatedSeries(std::string var, int order, std::vector<R> coeffs) : TruncatedSeries(std::move(var), order) {
    for (std::size_t i = 0; i < std::min(coeffs.size(), c_.size()); ++i) c_[i] = std::move(coeffs[i]);
  }
  static TruncatedSeries constant(std::string var, int order, R c) {
    TruncatedSeries s(std::move(var), order);
    s.c_[0] = std::move(c);
    return s;
  }
  static TruncatedSeries variable(std::string var, int order) {
    TruncatedSeries s(std::move(var), order);
    if (order >= 1) s.c_[1] = Tr::one();
    return s;
  }

  const std::string& var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  R coeff(int k) const { return k < 0 || k > order() ? Tr::zero() : c_[static_cast<std::size_t>(k)]; }
  // Index of the first nonzero coefficient, or order()+1 if none.
  int valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (!Tr::is_zero(c_[static_cast<std::size_t>(k)])) return k;
    return order() + 1;
  }
  bool is_zero() const { return valuation() > order(); }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(var_, std::min(order, this->order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = c_[static_cast<std::size_t>(k)];
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(a.var_, std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(a.var_, std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
    return s;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries s(var_, order());
    for (int k = 0; k <= order(); ++k) s[k] = Tr::zero() - c_[static_cast<std::size_t>(k)];
    return s;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int T = std::min(a.order(), b.order());
    TruncatedSeries s(a.var_, T);
    int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= T; ++i) {
      if (Tr::is_zero(a[i])) continue;
      for (int j = vb; i + j <= T; ++j) {
        if (Tr::is_zero(b[j])) continue;
        s[i + j] = s[i + j] + a[i] * b[j];
      }
    }
    return s;
  }
  TruncatedSeries scaled(const Rational& f) const {
    TruncatedSeries s(var_, order());
    for (int k = 0; k <= order(); ++k) s[k] = Tr::scale(c_[static_cast<std::size_t>(k)], f);
    return s;
  }
  TruncatedSeries times_ring(const R& f) const {
    TruncatedSeries s(var_, order());
    for (int k = 0; k <= order(); ++k) s[k] = c_[static_cast<std::size_t>(k)] * f;
    return s;
  }
  // Multiply by t^k (k may be negative if the low coefficients vanish).
  TruncatedSeries shifted(int k) const {
    int T = k >= 0 ? order() : order() + k;
    TruncatedSeries s(var_, T);
    for (int i = 0; i <= order(); ++i) {
      int j = i + k;
      if (j < 0) {
        if (!Tr::is_zero(c_[static_cast<std::size_t>(i)])) throw DomainError("negative shift drops a nonzero coefficient");
        continue;
      }
      if (j <= T) s[j] = c_[static_cast<std::size_t>(i)];
    }
    return s;
  }
  // d/dt, loses one order.
  TruncatedSeries derivative() const {
    TruncatedSeries s(var_, std::max(0, order() - 1));
    for (int k = 1; k <= order(); ++k) s[k - 1] = Tr::scale(c_[static_cast<std::size_t>(k)], Rational(k));
    return s;
  }
  // t d/dt, keeps the order.
  TruncatedSeries theta() const {
    TruncatedSeries s(var_, order());
    for (int k = 1; k <= order(); ++k) s[k] = Tr::scale(c_[static_cast<std::size_t>(k)], Rational(k));
    return s;
  }

  TruncatedSeries reciprocal() const {
    R inv0 = Tr::inverse(c_[0]);
    TruncatedSeries s(var_, order());
    s[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      R acc = Tr::zero();
      for (int k = 1; k <= n; ++k)
        if (!Tr::is_zero(c_[static_cast<std::size_t>(k)])) acc = acc + c_[static_cast<std::size_t>(k)] * s[n - k];
      s[n] = Tr::zero() - acc * inv0;
    }
    return s;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.reciprocal(); }

  TruncatedSeries pow(unsigned e) const {
    TruncatedSeries r = constant(var_, order(), Tr::one()), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  // exp(s) for s with zero constant term: n e_n = sum_k k s_k e_{n-k}.
  TruncatedSeries exp() const {
    if (!Tr::is_zero(c_[0])) throw DomainError("series exp needs a zero constant term");
    TruncatedSeries e(var_, order());
    e[0] = Tr::one();
    for (int n = 1; n <= order(); ++n) {
      R acc = Tr::zero();
      for (int k = 1; k <= n; ++k)
        if (!Tr::is_zero(c_[static_cast<std::size_t>(k)])) acc = acc + Tr::scale(c_[static_cast<std::size_t>(k)] * e[n - k], Rational(k));
      e[n] = Tr::scale(acc, Rational(1, n));
    }
    return e;
  }

  // log(s) for s with constant term 1.
  TruncatedSeries log() const {
    if (!Tr::is_one(c_[0])) throw DomainError("series log needs constant term 1");
    TruncatedSeries q = theta() * reciprocal();
    TruncatedSeries l(var_, order());
    for (int n = 1; n <= order(); ++n) l[n] = Tr::scale(q[n], Rational(1, n));
    return l;
  }

  // this(inner(t)); inner must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (!Tr::is_zero(inner[0])) throw DomainError("composition needs an inner series with zero constant term");
    int T = std::min(order(), inner.order());
    TruncatedSeries r = constant(var_, T, c_[static_cast<std::size_t>(T)]);
    TruncatedSeries in = inner.truncated(T);
    for (int k = T - 1; k >= 0; --k) {
      r = r * in;
      r[0] = r[0] + c_[static_cast<std::size_t>(k)];
    }
    return r;
  }

  // Compositional inverse by Lagrange: g_n = (1/n) [t^{n-1}] (t/f)^n.
  TruncatedSeries reverse() const {
    if (order() < 1 || !Tr::is_zero(c_[0]) || !Tr::is_one(c_[1]))
      throw DomainError("series reversion needs s = t + O(t^2)");
    int T = order();
    TruncatedSeries h = shifted(-1);  // f/t, order T-1
    TruncatedSeries w = h.reciprocal();
    TruncatedSeries g(var_, T);
    TruncatedSeries p = w;
    for (int n = 1; n <= T; ++n) {
      g[n] = Tr::scale(p[n - 1], Rational(1, n));
      if (n < T) p = p * w;
    }
    return g;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.order() == b.order() && a.c_ == b.c_; }

 private:
  static int checked(int order) {
    if (order < 0) throw DomainError("negative truncation order");
    return order;
  }
  std::string var_;
  std::vector<R> c_;
};

using SeriesQ = TruncatedSeries<Rational>;
using SeriesQr = TruncatedSeries<UPolyQ>;

}  // namespace hbk
