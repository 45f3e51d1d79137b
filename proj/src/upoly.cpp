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

#include "hbk/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "hbk/errors.hpp"

namespace hbk {

UPolyQ::UPolyQ(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPolyQ::UPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPolyQ UPolyQ::x(int power) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
  c.back() = 1;
  return UPolyQ(std::move(c));
}

void UPolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPolyQ::coeff(int k) const {
  return k < 0 || k >= static_cast<int>(c_.size()) ? Rational(0) : c_[static_cast<std::size_t>(k)];
}

Rational UPolyQ::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

UPolyQ UPolyQ::operator-() const {
  UPolyQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPolyQ& UPolyQ::operator+=(const UPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPolyQ& UPolyQ::operator-=(const UPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      c[i + j] += t;
    }
  }
  return UPolyQ(std::move(c));
}

UPolyQ& UPolyQ::operator*=(const UPolyQ& o) {
  *this = *this * o;
  return *this;
}

void UPolyQ::divmod(const UPolyQ& a, const UPolyQ& b, UPolyQ* q, UPolyQ* r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1), Rational(0));
  Rational inv = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] * inv;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
  }
  if (q) *q = UPolyQ(std::move(quo));
  if (r) *r = UPolyQ(std::move(rem));
}

UPolyQ UPolyQ::gcd(UPolyQ a, UPolyQ b) {
  while (!b.is_zero()) {
    UPolyQ r;
    divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.is_zero() ? a : a.monic();
}

UPolyQ UPolyQ::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPolyQ(std::move(d));
}

UPolyQ UPolyQ::monic() const {
  UPolyQ r = *this;
  Rational l = lead();
  for (auto& v : r.c_) v /= l;
  return r;
}

UPolyQ UPolyQ::pow(unsigned e) const {
  UPolyQ r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

UPolyQ UPolyQ::taylor_shift(const Rational& c) const {
  // Repeated synthetic division.
  std::vector<Rational> a = c_;
  int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += c * a[static_cast<std::size_t>(j + 1)];
  return UPolyQ(std::move(a));
}

UPolyQ UPolyQ::compose(const UPolyQ& inner) const {
  UPolyQ r;
  for (int k = degree(); k >= 0; --k) r = r * inner + UPolyQ(c_[static_cast<std::size_t>(k)]);
  return r;
}

Rational UPolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPolyQ UPolyQ::squarefree_part() const {
  if (is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (degree() == 0) return UPolyQ(1);
  UPolyQ g = gcd(*this, derivative());
  UPolyQ q;
  divmod(*this, g, &q, nullptr);
  return q.monic();
}

Rational UPolyQ::content() const {
  if (is_zero()) throw DomainError("content of the zero polynomial");
  Integer g = 0, l = 1;
  for (const auto& v : c_) {
    g = hbk::gcd(g, v.get_num());
    l = hbk::lcm(l, v.get_den());
  }
  Rational c(g, l);
  c.canonicalize();
  return lead() < 0 ? Rational(-c) : c;
}

UPolyQ UPolyQ::primitive() const {
  if (is_zero()) return *this;
  UPolyQ r = *this;
  Rational inv = 1 / content();
  for (auto& v : r.c_) v *= inv;
  return r;
}

SparsePolynomial UPolyQ::to_sparse(const std::string& var) const {
  SparsePolynomial p(std::vector<std::string>{var});
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term({static_cast<int>(i)}, c_[i]);
  return p;
}

UPolyQ UPolyQ::from_sparse(const SparsePolynomial& p, const std::string& var) {
  if (p.is_zero()) return {};
  if (p.nvars() == 0) return UPolyQ(p.constant_value());
  auto it = std::find(p.vars().begin(), p.vars().end(), var);
  long idx = it == p.vars().end() ? -1 : it - p.vars().begin();
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    int k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<long>(i) == idx) {
        k = e[i];
      } else if (e[i] != 0) {
        throw DomainError("polynomial is not univariate in '" + var + "'");
      }
    }
    if (k < 0) throw DomainError("negative exponent in univariate conversion");
    if (static_cast<std::size_t>(k) >= c.size()) c.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    c[static_cast<std::size_t>(k)] += v;
  }
  return UPolyQ(std::move(c));
}

std::string UPolyQ::to_string(const std::string& var) const { return to_sparse(var).to_string(); }

namespace {

int sign(const Rational& q) { return sgn(q); }

int sign_at_infinity(const UPolyQ& p, bool positive) {
  int s = sign(p.lead());
  return (!positive && p.degree() % 2 == 1) ? -s : s;
}

long variations(const std::vector<int>& signs) {
  long v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Prime factorization by trial division plus a primality test on the
// cofactor. Throws UnsupportedError if the cofactor is composite.
std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> f;
  n = abs(n);
  if (n <= 1) return f;
  for (unsigned long p = 2; p < 1000000UL && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      f.emplace_back(Integer(p), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) throw UnsupportedError("cannot factor " + n.get_str() + " for rational root search");
    f.emplace_back(n, 1);
  }
  return f;
}

std::vector<Integer> divisors(const Integer& n, std::size_t cap) {
  std::vector<Integer> d{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = d.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
      if (d.size() > cap) throw ResourceError("rational root search exceeds divisor budget");
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

long sturm_count(const UPolyQ& p, const Rational* lo, const Rational* hi) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  UPolyQ s = p.squarefree_part();
  std::vector<UPolyQ> chain{s, s.derivative()};
  while (!chain.back().is_zero()) {
    UPolyQ r;
    UPolyQ::divmod(chain[chain.size() - 2], chain.back(), nullptr, &r);
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and numbers small.
    chain.push_back(-r * UPolyQ(1 / abs(r.content())));
  }
  auto count_at = [&](const Rational* x, bool plus_inf) {
    std::vector<int> signs;
    for (const auto& q : chain) {
      if (q.is_zero()) continue;
      signs.push_back(x ? sign(q(*x)) : sign_at_infinity(q, plus_inf));
    }
    return variations(signs);
  };
  return count_at(lo, false) - count_at(hi, true);
}

RationalRootResult rational_roots(const UPolyQ& p, std::size_t max_divisors) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  RationalRootResult out;
  UPolyQ rest = p.primitive();
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    UPolyQ q;
    UPolyQ::divmod(rest, UPolyQ::x(), &q, nullptr);
    rest = q;
    ++zero_mult;
  }
  if (zero_mult) out.roots.push_back({Rational(0), zero_mult});
  if (rest.degree() >= 1) {
    auto num = divisors(rest.coeff(0).get_num(), max_divisors);
    auto den = divisors(rest.lead().get_num(), max_divisors);
    std::vector<Rational> cand;
    for (const auto& a : num)
      for (const auto& b : den) {
        Rational r(a, b);
        r.canonicalize();
        cand.push_back(r);
        cand.push_back(-r);
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const auto& r : cand) {
      int m = 0;
      while (rest.degree() >= 1 && rest(r) == 0) {
        UPolyQ q;
        UPolyQ::divmod(rest, UPolyQ(std::vector<Rational>{-r, 1}), &q, nullptr);
        rest = q;
        ++m;
      }
      if (m) out.roots.push_back({r, m});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  out.leftover = rest.primitive();
  return out;
}

}  // namespace hbk
