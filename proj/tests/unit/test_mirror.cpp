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

#include <map>

#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/guessing.hpp"
#include "hbk/mirror.hpp"
#include "hbk/parse.hpp"

using namespace hbk;

namespace {

ThetaOperator diagonal_op(int N) {
  static std::map<int, ThetaOperator> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  PotentialSpec s;
  s.N = N;
  CoefficientStream st(s, CoefficientStream::Provenance::BinomialClosedForm);
  auto op = guess_operator(st.take_rational(N <= 6 ? 120 : 160), GuessConfig{});
  REQUIRE(op);
  cache.emplace(N, *op);
  return *op;
}

const ThetaOperator& deformed_op() {
  static const ThetaOperator op = [] {
    ParametricConfig cfg;
    cfg.base.terms = 120;
    auto o = guess_parametric(deformed_family(4), cfg);
    REQUIRE(o);
    return *o;
  }();
  return op;
}

const std::vector<std::string> kR{"r"};

UPolyQ rpoly(const nlohmann::json& j) { return UPolyQ::from_sparse(fixtures::poly(j, kR), "r"); }

}  // namespace

TEST_CASE("moebius and Lambert inversion") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(7) == -1);

  SeriesQ geo("q", 9);
  for (int k = 1; k <= 9; ++k) geo[k] = 1;
  auto a = lambert_invert(geo);
  CHECK(a[0] == 1);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] == 0);

  SeriesQ even("q", 10);
  for (int k = 2; k <= 10; k += 2) even[k] = 4;
  auto b = lambert_invert(even);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == (i == 1 ? 4 : 0));

  // Round trip from pseudo-random integers.
  std::vector<Rational> c;
  long x = 12345;
  for (int i = 0; i < 15; ++i) {
    x = (x * 1103515245 + 12345) % 2147483648L;
    c.push_back(Rational(x % 201 - 100));
  }
  CHECK(lambert_invert(lambert_sum(c, 15)) == c);

  SeriesQ bad = SeriesQ::constant("q", 3, 1);
  CHECK_THROWS_AS(lambert_invert(bad), DomainError);
}

TEST_CASE("mirror maps of the diagonal operators") {
  const auto& fx = fixtures::load("mirror_maps.json");
  for (int N = 3; N <= 7; ++N) {
    auto m = mirror_data(diagonal_op(N), 10);
    CAPTURE(N);
    CHECK(m.t_of_q[0] == 0);
    const auto& want = fx["maps"][std::to_string(N)];
    for (int k = 1; k <= 10; ++k) CHECK(m.t_of_q[k] == Rational(want[k - 1].get<std::string>()));
    // Round trip q(t(q)) = q.
    SeriesQ q_of_t = (m.phi1 * m.y0.reciprocal()).exp().shifted(1).truncated(10);
    SeriesQ back = SeriesQ("q", 10, q_of_t.coeffs()).compose(m.t_of_q);
    CHECK(back == SeriesQ::variable("q", 10));
    for (const auto& c : m.t_of_q.coeffs()) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("short chains") {
  CHECK_THROWS_AS(mirror_data(diagonal_op(2), 6), UnsupportedError);
  auto m = mirror_data(diagonal_op(3), 6);
  CHECK(m.lambert.empty());
  CHECK_THROWS_AS(yukawa(diagonal_op(3), 6), UnsupportedError);
}

TEST_CASE("quintic Yukawa coupling") {
  // theta^4 - 5t(5 theta + 1)...(5 theta + 4); n_1 = 2875, n_2 = 609250, kappa = 5.
  std::vector<SparsePolynomial> at;
  for (const char* c : {"-120t", "-1250t", "-4375t", "-6250t", "1 - 3125t"}) at.push_back(parse_polynomial(c, {"t"}));
  auto m = mirror_data(ThetaOperator(at, "t"), 4);
  CHECK(m.lambert[0] == 575);
  CHECK(m.lambert[1] == 974800);
}

TEST_CASE("N = 5 instanton numbers are divisible by d^3" * doctest::may_fail()) {
  auto m = mirror_data(diagonal_op(5), 8);
  CHECK(m.yukawa[0] == 1);
  for (const auto& a : scaled(m.lambert, 3)) CHECK(a.get_den() == 1);
}

TEST_CASE("N = 5: 7 a_d / d^3 are integers") {
  auto m = mirror_data(diagonal_op(5), 8);
  for (const auto& a : scaled(m.lambert, 3)) CHECK(Rational(a * 7).get_den() == 1);
}

TEST_CASE("d^2 divisibility for N = 3, 4, 6" * doctest::may_fail()) {
  for (int N : {3, 4, 6}) {
    auto m = mirror_data(diagonal_op(N), 8);
    CAPTURE(N);
    for (const auto& a : scaled(m.lambert, 2)) CHECK(a.get_den() == 1);
  }
}

TEST_CASE("deformed family: Frobenius data and mirror map") {
  const auto& fx = fixtures::load("deformed_family.json");
  auto m = mirror_data(deformed_op(), 7, "r");
  for (std::size_t k = 0; k < fx["phi1"].size(); ++k) CHECK(m.phi1[static_cast<int>(k)] == rpoly(fx["phi1"][k]));
  CHECK(m.phi2[0].is_zero());
  CHECK(m.phi2[1].is_zero());
  for (std::size_t k = 0; k < fx["mirror_map"].size(); ++k)
    CHECK(m.t_of_q[static_cast<int>(k)] == rpoly(fx["mirror_map"][k]));

  UPolyQ sq = UPolyQ{Rational(-1), Rational(1)}.pow(2);
  for (std::size_t d = 2; d <= 7; ++d) {
    UPolyQ q, r;
    UPolyQ::divmod(m.lambert[d - 1], sq, &q, &r);
    CAPTURE(d);
    CHECK(r.is_zero());
    CHECK(m.lambert[d - 1](Rational(1)) == 0);
  }
  CHECK(m.lambert[0].is_zero());
  // The fixture numbers are 5/d times these.
  for (std::size_t d = 1; d <= 7; ++d)
    CHECK(m.lambert[d - 1] * UPolyQ(Rational(5, static_cast<long>(d))) == rpoly(fx["lambert"][d - 1]));
}

TEST_CASE("deformed chain agrees with the canonical basis at sample r") {
  for (Rational r : {Rational(0), Rational(2), Rational(-3, 4)}) {
    auto over_qr = mirror_data(deformed_op(), 8, "r");
    auto plain = mirror_data(deformed_op().substitute("r", r), 8);
    for (int k = 0; k <= 8; ++k) {
      CHECK(over_qr.phi2[k](r) == plain.phi2[k]);
      CHECK(over_qr.yukawa[k](r) == plain.yukawa[k]);
    }
  }
}

TEST_CASE("deformed mirror map at r = 0 is the Catalan series") {
  const auto& fx = fixtures::load("deformed_family.json");
  auto m = mirror_data(deformed_op().substitute("r", 0), 9);
  for (int k = 0; k <= 9; ++k) CHECK(m.t_of_q[k] == Rational(fx["mirror_map_r0"][k].get<std::string>()));
}
