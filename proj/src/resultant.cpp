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

#include "hbk/resultant.hpp"

#include <utility>
#include <vector>

#include "hbk/errors.hpp"

namespace hbk {

namespace {

// Dense univariate polynomial with coefficients in Q[other vars].
struct UPolyR {
  std::vector<SparsePolynomial> c;
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const SparsePolynomial& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

UPolyR split(const SparsePolynomial& f, std::size_t var) {
  if (f.min_degree_in(var) < 0) throw DomainError("resultant of a Laurent polynomial");
  UPolyR u;
  int d = f.degree_in(var);
  u.c.assign(static_cast<std::size_t>(d) + 1, SparsePolynomial(f.vars()));
  for (const auto& [e, v] : f.terms()) {
    Exponent ne = e;
    ne[var] = 0;
    u.c[static_cast<std::size_t>(e[var])].add_term(ne, v);
  }
  u.trim();
  return u;
}

// lc(b)^(deg a - deg b + 1) * a mod b
UPolyR prem(UPolyR a, const UPolyR& b) {
  int db = b.deg();
  int delta = a.deg() - db + 1;
  const SparsePolynomial& lb = b.lc();
  while (!a.c.empty() && a.deg() >= db) {
    SparsePolynomial la = a.lc();
    int shift = a.deg() - db;
    for (auto& x : a.c) x *= lb;
    for (int i = 0; i <= db; ++i) a.c[static_cast<std::size_t>(i + shift)] -= la * b.c[static_cast<std::size_t>(i)];
    a.trim();
    --delta;
  }
  if (delta > 0) {
    SparsePolynomial f = lb.pow(static_cast<unsigned>(delta));
    for (auto& x : a.c) x *= f;
  }
  return a;
}

}  // namespace

SparsePolynomial resultant(const SparsePolynomial& f, const SparsePolynomial& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with a zero polynomial");
  std::vector<std::string> vars = f.nvars() >= g.nvars() ? f.vars() : g.vars();
  UPolyR a = split(f.with_vars(vars), var), b = split(g.with_vars(vars), var);
  SparsePolynomial one(vars, 1);
  SparsePolynomial s = one;
  if (a.deg() < b.deg()) {
    std::swap(a, b);
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) s = -s;
  }
  if (b.deg() == 0) return s * b.lc().pow(static_cast<unsigned>(a.deg()));
  SparsePolynomial gg = one, h = one;
  for (;;) {
    int delta = a.deg() - b.deg();
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) s = -s;
    UPolyR r = prem(a, b);
    a = std::move(b);
    if (r.c.empty()) return SparsePolynomial(vars);
    SparsePolynomial div = gg * h.pow(static_cast<unsigned>(delta));
    for (auto& x : r.c) x = SparsePolynomial::exact_divide(x, div);
    b = std::move(r);
    gg = a.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      h = SparsePolynomial::exact_divide(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.deg() == 0) break;
  }
  int da = a.deg();
  SparsePolynomial res = SparsePolynomial::exact_divide(b.lc().pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  return s * res;
}

SparsePolynomial discriminant(const SparsePolynomial& f, std::size_t var) {
  int n = f.degree_in(var);
  if (n < 1) throw DomainError("discriminant of a polynomial of degree < 1");
  SparsePolynomial r = resultant(f, f.derivative(var), var);
  auto cs = split(f, var);
  SparsePolynomial d = SparsePolynomial::exact_divide(r, cs.lc());
  return (static_cast<long>(n) * (n - 1) / 2) % 2 ? -d : d;
}

}  // namespace hbk
