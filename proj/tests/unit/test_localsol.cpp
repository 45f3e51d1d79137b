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
#include "hbk/localsol.hpp"
#include "hbk/parse.hpp"

using namespace hbk;

namespace {

const std::vector<std::string> kT{"t"};

ThetaOperator fixture_op(int N) {
  const auto& fx = fixtures::load("diagonal_operators.json");
  return fixtures::theta_operator(fx["operators"][std::to_string(N)], kT, "t");
}

ThetaOperator guessed(int N) {
  static std::map<int, ThetaOperator> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  PotentialSpec s;
  s.N = N;
  CoefficientStream st(s, CoefficientStream::Provenance::BinomialClosedForm);
  std::size_t terms = N <= 6 ? 120 : N == 7 ? 160 : 240;
  auto op = guess_operator(st.take_rational(terms), GuessConfig{});
  REQUIRE(op);
  cache.emplace(N, *op);
  return *op;
}

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("indicial data at zero") {
  auto i4 = indicial(fixture_op(4), LocalPoint::zero());
  CHECK(i4.exponents() == ints({0, 0, 0}));
  CHECK(i4.leftover_degree() == 0);
  auto i6 = indicial(fixture_op(6), LocalPoint::zero());
  CHECK(i6.exponents() == ints({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("indicial data at infinity and at finite points") {
  const auto& pf = fixtures::load("pf3.json");
  std::vector<std::string> xyz{"x", "y", "z"};
  std::vector<SparsePolynomial> p = fixtures::polys(pf["operators"]["4"], xyz);
  auto op = ThetaOperator::from_d_form(p, "x");
  auto inf = indicial(op, LocalPoint::infinity());
  // Oracle: x^{-lambda} against the top x-coefficients of the d/dx form.
  UPolyQ oracle;
  for (std::size_t k = 0; k < p.size(); ++k) {
    SparsePolynomial lc = p[k].coefficients_in(0).back().substitute(1, Rational(2)).substitute(2, Rational(5));
    UPolyQ ff(lc.constant_value());
    for (std::size_t i = 0; i < k; ++i) ff *= UPolyQ{Rational(-static_cast<long>(i)), Rational(-1)};
    oracle += ff;
  }
  std::vector<Rational> want;
  for (const auto& r : rational_roots(oracle).roots)
    for (int i = 0; i < r.multiplicity; ++i) want.push_back(r.root);
  CHECK(want == ints({1, 1, 1, 2}));
  CHECK(inf.exponents() == want);
  CHECK(inf.leftover_degree() == 0);
  CHECK(indicial(op, LocalPoint::zero()).exponents() == ints({0, 0, 0, 1}));

  // (t - 2) theta + t is singular at 2.
  auto op2 = ThetaOperator({parse_polynomial("t", kT), parse_polynomial("t - 2", kT)}, "t");
  auto at2 = indicial(op2, LocalPoint::at(2));
  CHECK_FALSE(at2.ordinary);
  REQUIRE(at2.roots.size() == 1);
  CHECK(at2.roots[0].root == -1);  // y = 1/(t - 2)
  auto at5 = indicial(fixture_op(3), LocalPoint::at(5));
  CHECK(at5.ordinary);
  CHECK(at5.exponents() == ints({0, 1}));
}

TEST_CASE("pure logarithm") {
  auto op = ThetaOperator({SparsePolynomial(kT, 0), SparsePolynomial(kT, 0), SparsePolynomial(kT, 1)}, "t");
  JordanProfile prof;
  auto basis = frobenius_basis(op, 6, &prof);
  REQUIRE(basis.size() == 2);
  CHECK(prof == JordanProfile{{0, 2}});
  CHECK(basis[0].phi.size() == 1);
  CHECK(basis[0].phi[0] == SeriesQ::constant("t", 6, 1));
  REQUIRE(basis[1].phi.size() == 2);
  CHECK(basis[1].phi[0].is_zero());
  CHECK(basis[1].phi[1] == SeriesQ::constant("t", 6, 1));
}

TEST_CASE("Jordan profiles match the recorded monodromy") {
  const auto& fx = fixtures::load("monodromy.json");
  for (auto& [key, blocks] : fx["profiles"].items()) {
    int N = std::stoi(key);
    JordanProfile want;
    for (const auto& b : blocks) want.push_back({Rational(b[0].get<int>()), b[1].get<int>()});
    CAPTURE(N);
    CHECK(jordan_profile(guessed(N)) == want);
  }
}

TEST_CASE("block sizes fill the order") {
  for (int N = 2; N <= 8; ++N) {
    auto op = guessed(N);
    int total = 0;
    for (const auto& b : jordan_profile(op)) total += b.size;
    CAPTURE(N);
    CHECK(total == op.order());
    if (N <= 5) CHECK(jordan_profile(op) == JordanProfile{{0, N - 1}});
  }
}

TEST_CASE("Frobenius bases are solutions in canonical form") {
  for (int N : {3, 4, 6, 7}) {
    auto op = guessed(N);
    JordanProfile prof;
    auto basis = frobenius_basis(op, 30, &prof);
    CAPTURE(N);
    CHECK(static_cast<int>(basis.size()) == op.order());
    for (const auto& s : basis) {
      CHECK(annihilates(op, s));
      CHECK(s.log_depth() == s.position);
      const auto& head = basis[static_cast<std::size_t>(&s - &basis[0] - s.position)];
      int rho = static_cast<int>(s.exponent.get_num().get_si());
      if (s.position == 0) CHECK(s.phi[0][rho] == 1);
      else CHECK(s.phi[0][rho] == 0);
      CHECK(head.phi[0].valuation() == rho);
    }
    // Reproducible under a longer truncation.
    auto longer = frobenius_basis(op, 40);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis[i].phi.size(); ++j) CHECK(longer[i].phi[j].truncated(30) == basis[i].phi[j]);
  }
}

TEST_CASE("the head of the long chain is the period") {
  for (int N : {3, 6, 7}) {
    auto basis = frobenius_basis(guessed(N), 20);
    PotentialSpec spec;
    spec.N = N;
    CoefficientStream st(spec, CoefficientStream::Provenance::BinomialClosedForm);
    CHECK(basis[0].phi[0] == SeriesQ("t", 20, st.take_rational(21)));
  }
}

TEST_CASE("epsilon chain agrees with the linear-algebra chain") {
  for (int N : {3, 5, 6, 7}) {
    auto op = guessed(N);
    auto basis = frobenius_basis(op, 25);
    int len = jordan_profile(op)[0].size;
    auto chain = frobenius_chain(op, std::min(len, 3), 25);
    CAPTURE(N);
    for (std::size_t k = 0; k < chain.size(); ++k) CHECK(chain[k] == basis[k].phi[0]);
  }
}

TEST_CASE("unsupported exponents") {
  auto half = ThetaOperator({parse_polynomial("-1", kT), parse_polynomial("2", kT)}, "t");
  CHECK_THROWS_AS(frobenius_basis(half, 5), UnsupportedError);
  auto neg = ThetaOperator({parse_polynomial("1", kT), parse_polynomial("1", kT)}, "t");
  CHECK_THROWS_AS(frobenius_basis(neg, 5), UnsupportedError);
}
