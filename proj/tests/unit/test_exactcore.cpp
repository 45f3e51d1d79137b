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

#include <random>

#include "hbk/cyclotomic.hpp"
#include "hbk/errors.hpp"
#include "hbk/json_io.hpp"
#include "hbk/linalg.hpp"
#include "hbk/operator.hpp"
#include "hbk/resultant.hpp"
#include "hbk/series.hpp"
#include "hbk/shaped.hpp"
#include "hbk/upoly.hpp"

using namespace hbk;

namespace {

const std::vector<std::string> kAbcT{"a", "b", "c", "T"};

SparsePolynomial var(const std::vector<std::string>& vs, const std::string& name, int p = 1) {
  auto it = std::find(vs.begin(), vs.end(), name);
  return SparsePolynomial::variable(vs, static_cast<std::size_t>(it - vs.begin()), p);
}

// Determinant over Q by plain elimination; oracle for resultants.
Rational det(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

Rational sylvester(const UPolyQ& f, const UPolyQ& g) {
  int m = f.degree(), n = g.degree();
  std::size_t s = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
  return det(a);
}

SparsePolynomial random_poly(std::mt19937& rng, const std::vector<std::string>& vs, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  SparsePolynomial p(vs);
  for (int i = 0; i < terms; ++i) {
    Exponent e(vs.size());
    for (auto& x : e) x = deg(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

SeriesQ random_series(std::mt19937& rng, int T, bool zero_const, bool unit_linear) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  SeriesQ s("t", T);
  for (int k = 0; k <= T; ++k) s[k] = Rational(num(rng), den(rng));
  for (int k = 0; k <= T; ++k) s[k].canonicalize();
  if (zero_const) s[0] = 0;
  if (unit_linear) s[1] = 1;
  return s;
}

}  // namespace

TEST_CASE("polynomial arithmetic and exact division") {
  std::vector<std::string> xy{"x", "y"};
  auto x = var(xy, "x"), y = var(xy, "y");
  auto p = (x + y).pow(3);
  CHECK(p.size() == 4);
  CHECK(p.coeff({2, 1}) == 3);
  auto q = SparsePolynomial::exact_divide(p, x + y);
  CHECK(q == (x + y).pow(2));
  SparsePolynomial dummy;
  CHECK_FALSE(SparsePolynomial::divides(x - y, p, &dummy));
  CHECK_THROWS_AS(SparsePolynomial::exact_divide(p, x - y), DomainError);
  // Laurent constant term
  auto lp = (x + SparsePolynomial::monomial(xy, {-1, 0}, 1)).pow(4);
  CHECK(lp.constant_term_in({0}).constant_value() == 6);
  CHECK((x * 6 + y * 4).content() == 2);
  CHECK((x * -6 + y * 4).primitive_part() == y * -2 + x * 3);
}

TEST_CASE("resultant examples") {
  auto a = var(kAbcT, "a"), b = var(kAbcT, "b"), c = var(kAbcT, "c"), T = var(kAbcT, "T");
  auto r = resultant(T * T + b * T + c, T * 2 + b, 3);
  CHECK(r == c * 4 - b * b);
  CHECK(discriminant(T * T + b * T + c, 3) == b * b - c * 4);
  auto r3 = resultant(T.pow(3) - SparsePolynomial(kAbcT, 1), c + a * T + b * T * T, 3);
  CHECK(r3 == c.pow(3) + a.pow(3) + b.pow(3) - a * b * c * 3);
  std::vector<std::string> xyzT{"x", "y", "z", "T"};
  auto X = var(xyzT, "x"), Y = var(xyzT, "y"), Z = var(xyzT, "z"), TT = var(xyzT, "T");
  auto d = discriminant(X * TT * TT + (X + Y - Z) * TT + Y, 3);
  CHECK(d == (X + Y - Z).pow(2) - X * Y * 4);
  CHECK_THROWS_AS(resultant(SparsePolynomial(kAbcT), T, 3), DomainError);
}

TEST_CASE("resultant against Sylvester determinants and its identities") {
  std::mt19937 rng(7);
  std::vector<std::string> vs{"u", "T"};
  for (int iter = 0; iter < 25; ++iter) {
    auto f = random_poly(rng, vs, 3, 5), g = random_poly(rng, vs, 3, 4), h = random_poly(rng, vs, 2, 3);
    if (f.degree_in(1) < 1 || g.degree_in(1) < 1 || h.degree_in(1) < 1) continue;
    auto rfg = resultant(f, g, 1);
    auto rgf = resultant(g, f, 1);
    int sgn = (f.degree_in(1) * g.degree_in(1)) % 2 ? -1 : 1;
    CHECK(rfg == rgf * Rational(sgn));
    CHECK(resultant(f, g * h, 1) == rfg * resultant(f, h, 1));
    for (int u = -2; u <= 2; ++u) {
      auto fu = UPolyQ::from_sparse(f.substitute(0, Rational(u)).compact_vars(), "T");
      auto gu = UPolyQ::from_sparse(g.substitute(0, Rational(u)).compact_vars(), "T");
      if (fu.degree() != f.degree_in(1) || gu.degree() != g.degree_in(1)) continue;
      CHECK(rfg.substitute(0, Rational(u)).constant_value() == sylvester(fu, gu));
    }
  }
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(UPolyQ({1, 4, 1})) == 2);
  CHECK(sturm_count(UPolyQ({1, 0, 1})) == 0);
  CHECK(sturm_count(UPolyQ({1, 11, 11, 1})) == 3);
  // (x-1)^2 (x+2)(x-3/2): three distinct real roots
  UPolyQ p = UPolyQ({-1, 1}).pow(2) * UPolyQ({2, 1}) * UPolyQ({Rational(-3, 2), 1});
  CHECK(sturm_count(p) == 3);
  Rational lo = 0, hi = 2;
  CHECK(sturm_count(p, &lo, &hi) == 2);
  CHECK_THROWS_AS(sturm_count(UPolyQ()), DomainError);
  auto rr = rational_roots(p);
  REQUIRE(rr.roots.size() == 3);
  CHECK(rr.roots[0].root == -2);
  CHECK(rr.roots[1].root == 1);
  CHECK(rr.roots[1].multiplicity == 2);
  CHECK(rr.roots[2].root == Rational(3, 2));
  CHECK(rr.leftover.degree() == 0);
}

TEST_CASE("nullspace examples") {
  MatrixQ id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(rational_nullspace(id).empty());
  auto ns = rational_nullspace(MatrixQ{{1, 1}, {2, 2}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == VectorQ{-1, 1});
  // Ansatz order 1, degree 1 for c_i = C(2i, i): unknowns a_{d,e} (d,e in {0,1}),
  // rows k = 0..3 and entry (k-e)^d c_{k-e}; columns (d,e) = (0,0),(0,1),(1,0),(1,1).
  std::vector<Rational> c{1, 2, 6, 20, 70};
  MatrixQ m;
  for (int k = 0; k < 4; ++k) {
    VectorQ row;
    for (int d = 0; d <= 1; ++d)
      for (int e = 0; e <= 1; ++e) {
        if (k - e < 0) {
          row.push_back(0);
          continue;
        }
        Rational pw = d == 0 ? Rational(1) : Rational(k - e);
        row.push_back(pw * c[static_cast<std::size_t>(k - e)]);
      }
    m.push_back(row);
  }
  auto n2 = rational_nullspace(m);
  REQUIRE(n2.size() == 1);
  // (4t - 1) theta + 2t: a_{0,0}=0, a_{0,1}=2, a_{1,0}=-1, a_{1,1}=4
  VectorQ expect{0, 2, -1, 4};
  Rational f = n2[0][3] / 4;
  for (std::size_t j = 0; j < 4; ++j) CHECK(n2[0][j] == expect[j] * f);
}

TEST_CASE("modular nullspace agrees with exact elimination") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t rows = 6 + iter % 5, cols = 8 + iter % 4, rank = 3 + iter % 3;
    MatrixQ l(rows, VectorQ(rank)), r(rank, VectorQ(cols));
    for (auto& row : l)
      for (auto& v : row) v = dist(rng);
    for (auto& row : r)
      for (auto& v : row) v = Rational(dist(rng), 1 + (dist(rng) + 20) % 7);
    for (auto& row : r)
      for (auto& v : row) v.canonicalize();
    MatrixQ m(rows, VectorQ(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < rank; ++k) m[i][j] += l[i][k] * r[k][j];
    NullspaceOptions ex, mo;
    ex.mode = NullspaceOptions::Mode::Exact;
    mo.mode = NullspaceOptions::Mode::Modular;
    NullspaceStats st;
    auto a = rational_nullspace(m, ex);
    auto b = rational_nullspace(m, mo, &st);
    CHECK(st.modular);
    CHECK(a == b);
  }
}

TEST_CASE("rational reconstruction") {
  Integer m = Integer(1000003) * 1000033;
  Rational q(-37, 91);
  // a = q mod m
  Integer inv;
  Integer den = 91;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Integer a = (Integer(-37) * inv) % m;
  if (a < 0) a += m;
  Rational out;
  REQUIRE(rational_reconstruct(a, m, &out));
  CHECK(out == q);
}

TEST_CASE("series reversion examples and properties") {
  SeriesQ t = SeriesQ::variable("t", 5);
  CHECK(t.reverse() == t);
  SeriesQ s("t", 5, {0, 1, -1});
  CHECK(s.reverse() == SeriesQ("t", 5, {0, 1, 1, 2, 5, 14}));
  SeriesQ q("q", 4, {0, 1, -2, 5, -14});
  // Term-by-term substitution gives 4 for the q^4 coefficient.
  CHECK(q.reverse() == SeriesQ("q", 4, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(SeriesQ("t", 3, {1, 1}).reverse(), DomainError);
  CHECK_THROWS_AS(SeriesQ("t", 3, {0, 2}).reverse(), DomainError);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto r = random_series(rng, 8, true, true);
    CHECK(r.reverse().reverse() == r);
    CHECK(r.compose(r.reverse()) == SeriesQ::variable("t", 8));
  }
  for (int i = 0; i < 30; ++i) {
    auto r = random_series(rng, 8, true, false);
    auto one = SeriesQ::constant("t", 8, 1);
    CHECK((one + r).log().exp() == one + r);
    CHECK((r.exp()).log() == r);
  }
}

TEST_CASE("series over Q[r]") {
  SeriesQr s("t", 3, {UPolyQ(0), UPolyQ(1), UPolyQ({0, 1})});
  auto inv = s.reverse();
  CHECK(inv[2] == UPolyQ({0, -1}));
  CHECK(inv[3] == UPolyQ({0, 0, 2}));
}

TEST_CASE("shaped rationals: y and z recursions mirror each other") {
  ShapedRational a0(SparsePolynomial(ShapedRational::vars(), 1), 1);
  for (int N = 2; N <= 6; ++N) {
    ShapedRational ay = a0, az = a0;
    for (int m = 1; m <= 2; ++m) {
      for (int k = 0; k < N - 1; ++k) {
        ay = ay.theta_y();
        az = az.theta_z();
      }
      ay = ay.d_dy();
      az = az.d_dz();
      ShapedRational sw = ay.swapped();
      CHECK((sw == az || sw == -az));
    }
  }
  // d/dz (1/(z-y)) = -1/(z-y)^2
  auto d = a0.d_dz();
  CHECK(d.denominator_exponent() == 2);
  CHECK(d.scalar() == -1);
  // (z^2 - y^2)/(z - y) reduces to y + z
  auto zz = SparsePolynomial::variable(ShapedRational::vars(), 1, 2) - SparsePolynomial::variable(ShapedRational::vars(), 0, 2);
  ShapedRational red(zz, 1);
  CHECK(red.denominator_exponent() == 0);
}

TEST_CASE("cyclotomic field") {
  for (int n : {3, 4, 5, 6, 7, 12}) {
    auto z = CyclotomicNumber::zeta(n);
    CHECK(z.pow(static_cast<unsigned>(n)) == CyclotomicNumber(n, 1));
    auto w = z + CyclotomicNumber(n, 2) * z.pow(2) - CyclotomicNumber(n, Rational(1, 3));
    CHECK(w.conj().conj() == w);
    CHECK(w * w.inverse() == CyclotomicNumber(n, 1));
    CHECK((z + z.conj()).conj() == z + z.conj());
  }
  CHECK(cyclotomic_polynomial(6) == UPolyQ({1, -1, 1}));
  CHECK_THROWS_AS(CyclotomicNumber(5, 0).inverse(), DomainError);
}

TEST_CASE("theta operators") {
  std::vector<std::string> tv{"t"};
  auto t = SparsePolynomial::variable(tv, 0);
  ThetaOperator op({t * 2, t * 4 - SparsePolynomial(tv, 1)}, "t");
  SeriesQ c("t", 12);
  for (int i = 0; i <= 12; ++i) c[i] = Rational(binomial(2 * i, i));
  auto r = op.apply(c);
  CHECK(r.order() == 11);
  CHECK(r.is_zero());
  // theta^3 - 4t theta - 2t kills Phi_2(t)^2
  ThetaOperator sym({t * -2, t * -4, SparsePolynomial(tv), SparsePolynomial(tv, 1)}, "t");
  SeriesQ phi("t", 12);
  for (int i = 0; i <= 12; ++i) phi[i] = Rational(1) / (factorial(i) * factorial(i));
  CHECK(sym.apply(phi * phi).is_zero());
  ThetaOperator th({SparsePolynomial(tv), SparsePolynomial(tv, 1)}, "t");
  auto one_t = SeriesQ("t", 1, {1, 1});
  CHECK(th.apply(one_t) == SeriesQ("t", 1, {0, 1}));
  // round trip through the d/dt form
  auto back = ThetaOperator::from_d_form(sym.to_d_form(), "t");
  CHECK(back.equal_up_to_sign(sym));
  CHECK(op.normal_form().coeff(1).terms().begin()->second > 0);
  CHECK(ThetaOperator({t * -2, -(t * 4) + SparsePolynomial(tv, 1)}, "t").equal_up_to_sign(op));
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling1_signed(4, 2) == 11);
}

TEST_CASE("json round trips") {
  std::vector<std::string> xy{"x", "y"};
  auto p = SparsePolynomial::variable(xy, 0, 3) * Rational(-7, 3) + SparsePolynomial::variable(xy, 1);
  CHECK(io::polynomial_from_json(io::polynomial_json(p)) == p);
  SeriesQ s("t", 3, {1, Rational(1, 2), 0, -4});
  CHECK(io::series_from_json(io::series_json(s)) == s);
  auto j = io::polynomial_json(p);
  CHECK(j["terms"][0]["n"].is_string());
}
