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

#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/guessing.hpp"
#include "hbk/parse.hpp"

using namespace hbk;

namespace {

const std::vector<std::string> kT{"t"};

ThetaOperator op_t(std::vector<std::string> coeffs) {
  std::vector<SparsePolynomial> a;
  for (auto& c : coeffs) a.push_back(parse_polynomial(c, kT));
  return ThetaOperator(a, "t");
}

std::vector<Rational> diagonal(int N, std::size_t n) {
  PotentialSpec s;
  s.N = N;
  CoefficientStream st(s, CoefficientStream::Provenance::BinomialClosedForm);
  return st.take_rational(n);
}

}  // namespace

TEST_CASE("apply_operator examples") {
  SeriesQ cb("t", 12);
  for (int i = 0; i <= 12; ++i) cb[i] = Rational(binomial(2 * i, i));
  CHECK(apply_operator(op_t({"2t", "4t - 1"}), cb).is_zero());
  CHECK(apply_operator(op_t({"2t", "4t - 1"}), cb).order() == 11);

  const auto& fx = fixtures::load("diagonal_operators.json");
  auto sym2 = fixtures::theta_operator(fx["clausen_sym2"]["theta"], kT, "t");
  SeriesQ phi = phi_series(2, 12);
  phi = SeriesQ("t", 12, phi.coeffs());
  CHECK(apply_operator(sym2, phi * phi).is_zero());

  SeriesQ one_t("t", 1, {Rational(1), Rational(1)});
  auto r = apply_operator(op_t({"0", "1"}), one_t);
  CHECK(r[0] == 0);
  CHECK(r[1] == 1);

  auto two_var = ThetaOperator({parse_polynomial("t s", {"t", "s"})}, "t");
  CHECK_THROWS_AS(apply_operator(two_var, cb), DomainError);
}

TEST_CASE("guessed diagonal operators match the fixture list") {
  const auto& fx = fixtures::load("diagonal_operators.json");
  GuessConfig cfg;
  for (int N = 2; N <= 6; ++N) {
    auto ref = fixtures::theta_operator(fx["operators"][std::to_string(N)], kT, "t");
    auto op = guess_operator(diagonal(N, 120), cfg);
    REQUIRE(op);
    CHECK(op->equal_up_to_sign(ref.normal_form()));
  }
}

TEST_CASE("order-first and anti-diagonal sweeps agree") {
  auto c = diagonal(4, 80);
  GuessConfig a, b;
  b.strategy = GuessConfig::Strategy::AntiDiagonal;
  auto oa = guess_operator(c, a), ob = guess_operator(c, b);
  REQUIRE(oa);
  REQUIRE(ob);
  CHECK(*oa == *ob);
}

TEST_CASE("monotone in the bounds") {
  auto c = diagonal(5, 120);
  GuessConfig small, large;
  small.max_order = 4;
  small.max_degree = 5;
  large.max_order = 9;
  large.max_degree = 30;
  auto a = guess_operator(c, small), b = guess_operator(c, large);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == *b);
}

TEST_CASE("soundness under mutation") {
  auto c = diagonal(3, 60);
  GuessConfig cfg;
  auto good = guess_operator(c, cfg);
  REQUIRE(good);
  for (std::size_t k : {5u, 20u, 40u, 59u}) {
    auto bad = c;
    bad[k] += 1;
    auto op = guess_operator(bad, cfg);
    CHECK((!op || !(*op == *good)));
    if (op) {
      SeriesQ s("t", static_cast<int>(bad.size()) - 1, bad);
      CHECK(apply_operator(*op, s).is_zero());
    }
  }
}

TEST_CASE("too few coefficients") {
  GuessConfig cfg;
  CHECK_THROWS_AS(guess_operator(diagonal(2, 15), cfg), ResourceError);
}

TEST_CASE("rational interpolation") {
  // (r^2 + 1)/(r - 7) from exact samples.
  std::vector<Rational> x, y;
  for (int i = 0; i < 6; ++i) {
    Rational r(2 * i + 2);
    x.push_back(r);
    y.push_back((r * r + 1) / (r - 7));
  }
  UPolyQ n, d;
  REQUIRE(rational_interpolate(x, y, &n, &d));
  CHECK(n == UPolyQ({1, 0, 1}));
  CHECK(d == UPolyQ({-7, 1}));
}

TEST_CASE("parametric guess for the deformed N = 4 family") {
  ParametricConfig cfg;
  cfg.base.terms = 120;
  ParametricReport rep;
  auto op = guess_parametric(deformed_family(4), cfg, &rep);
  REQUIRE(op);
  CHECK(op->order() == 4);
  for (Rational r : {Rational(0), Rational(-3, 7), Rational(5, 2)}) {
    auto c = deformed_family(4)(r, 60);
    SeriesQ s("t", 59, c);
    CHECK(apply_operator(op->substitute("r", r), s).is_zero());
  }
  // Printed data that is self-consistent: P_0, P_3 up to one common sign and
  // the first factor of P_4.
  const auto& fx = fixtures::load("deformed_family.json");
  std::vector<std::string> tr{"t", "r"};
  auto ref = fixtures::polys(fx["theta"], tr);
  Rational sgn = op->coefficient(3, 0).constant_value() / ref[3].coeff({0, 0});
  CHECK(op->coeff(0) == ref[0] * sgn);
  CHECK(op->coeff(3) == ref[3] * sgn);
  auto first = fixtures::poly(fx["p4_singular_factor"], tr);
  SparsePolynomial q(tr);
  CHECK(SparsePolynomial::divides(first, op->coeff(4), &q));
  // r = 1 collapses to the diagonal order-3 operator.
  auto c1 = deformed_family(4)(Rational(1), 80);
  auto op1 = guess_operator(c1, cfg.base);
  REQUIRE(op1);
  CHECK(op1->order() == 3);
}
