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

#include <chrono>

#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/kernelexp.hpp"
#include "hbk/parse.hpp"
#include "hbk/rational.hpp"

using namespace hbk;

namespace {

const std::vector<std::string> kYZ{"y", "z"};

SparsePolynomial yz(const std::string& s) { return parse_polynomial(s, kYZ); }

// Oracle for the N = 2 triangle: [t^j] P_m(t, 1) = C(m, j)^2.
Integer squared_binomial(int m, int j) {
  Integer b = binomial(m, j);
  return b * b;
}

}  // namespace

TEST_CASE("kernel: first terms") {
  auto t2 = kernel_expansion(2, 3);
  CHECK(t2[0].P == yz("1"));
  CHECK(t2[0].denominator_exponent == 1);
  CHECK(t2[1].P == yz("y + z"));
  CHECK(t2[2].P == yz("y^2 + 4 y z + z^2"));
  CHECK(t2[3].P == yz("y^3 + 9 y^2 z + 9 y z^2 + z^3"));
  CHECK(t2[3].denominator_exponent == 7);
  // Numerator of Sum (k+1)^4 u^k is 1 + 11u + 11u^2 + u^3.
  CHECK(kernel_expansion(4, 1)[1].P == yz("y^3 + 11 y^2 z + 11 y z^2 + z^3"));
  CHECK_THROWS_AS(kernel_expansion(1, 2), DomainError);
  CHECK_THROWS_AS(kernel_expansion(2, -1), DomainError);
}

TEST_CASE("kernel: table 1 fixtures" * doctest::test_suite("transcription-dependent")) {
  auto j = fixtures::load("kernel_tables.json");
  for (const auto& [key, rows] : j["table1"].items()) {
    int N = std::stoi(key);
    auto terms = kernel_expansion(N, static_cast<int>(rows.size()));
    for (std::size_t m = 1; m <= rows.size(); ++m) {
      CAPTURE(N);
      CAPTURE(m);
      CHECK(terms[m].P == fixtures::poly(rows[m - 1], kYZ));
    }
  }
  auto tri = j["triangle_N2"];
  auto terms = kernel_expansion(2, static_cast<int>(tri.size()) - 1);
  for (std::size_t m = 0; m < tri.size(); ++m) {
    UPolyQ p = dehomogenize(terms[m].P);
    for (std::size_t k = 0; k < tri[m].size(); ++k)
      CHECK(p.coeff(static_cast<int>(k)) == parse_rational(tri[m][k].get<std::string>()));
  }
}

TEST_CASE("kernel: N = 2 triangle is the squared Pascal triangle") {
  auto terms = kernel_expansion(2, 10);
  for (int m = 0; m <= 10; ++m) {
    UPolyQ p = dehomogenize(terms[m].P);
    for (int j = 0; j <= m; ++j) CHECK(p.coeff(j) == Rational(squared_binomial(m, j)));
  }
}

TEST_CASE("kernel: crosscheck against binomial powers") {
  for (int N = 2; N <= 5; ++N) {
    CAPTURE(N);
    auto r = kernel_crosscheck(N, N <= 3 ? 8 : 5, 6);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("kernel: PDE system") {
  for (int N = 2; N <= 4; ++N) {
    auto r = pde_check(N, 8);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("kernel: gamma vectors") {
  CHECK(gamma_vector(kernel_expansion(3, 2)[2]) == std::vector<Integer>{1, 16, 10});
  CHECK(gamma_vector(kernel_expansion(2, 4)[4]) == std::vector<Integer>{1, 12, 6});
  CHECK(gamma_vector(kernel_expansion(4, 1)[1]) == std::vector<Integer>{1, 8});
  CHECK_THROWS_AS(gamma_vector(UPolyQ{1, 2}), DomainError);
  // Unitriangular: reconstruct the polynomial.
  UPolyQ p = dehomogenize(kernel_expansion(3, 4)[4].P);
  auto g = gamma_vector(p);
  UPolyQ back, t = UPolyQ::x(), one_t{1, 1};
  int d = p.degree();
  for (int k = 0; k < static_cast<int>(g.size()); ++k) back += UPolyQ(Rational(g[k])) * t.pow(k) * one_t.pow(d - 2 * k);
  CHECK(back == p);
}

TEST_CASE("kernel: table 2 fixtures" * doctest::test_suite("transcription-dependent")) {
  auto j = fixtures::load("kernel_tables.json")["table2"];
  std::vector<int> rows = j["rows"].get<std::vector<int>>();
  for (int N : {2, 3, 4}) {
    const auto& col = j[std::to_string(N)];
    // Row label m is P_m for N = 2 and P_{m-1} for N = 3, 4.
    int shift = N == 2 ? 0 : 1;
    auto terms = kernel_expansion(N, rows.back());
    for (std::size_t i = 0; i < col.size(); ++i) {
      CAPTURE(N);
      CAPTURE(rows[i]);
      std::vector<Integer> want;
      for (const auto& x : col[i]) want.emplace_back(x.get<long>());
      CHECK(gamma_vector(terms[rows[i] - shift]) == want);
    }
  }
}

TEST_CASE("kernel: structural invariants") {
  for (int N = 2; N <= 5; ++N) {
    int M = N <= 3 ? 12 : (N == 4 ? 10 : 8);
    for (const auto& k : kernel_diagnostics(N, M)) {
      CAPTURE(N);
      CAPTURE(k.m);
      CHECK(k.integral);
      CHECK(k.homogeneous);
      CHECK(k.symmetric);
      CHECK(k.palindromic);
      CHECK(k.extremes_one);
      CHECK(k.row_sum_ok);
      if (!k.gamma.empty()) CHECK(k.gamma[0] == 1);
    }
  }
  auto d2 = kernel_diagnostics(2, 5);
  CHECK(d2[5].row_sum == 252);
  CHECK(kernel_diagnostics(3, 2)[2].row_sum == 90);
  auto d4 = kernel_diagnostics(4, 2);
  CHECK(d4[2].degree == 6);
  CHECK(d4[2].real_roots == 6);
}

TEST_CASE("kernel: gamma positivity" * doctest::test_suite("conjecture")) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& k : kernel_diagnostics(N, N == 4 ? 10 : 12)) {
      if (k.m == 0) continue;
      CAPTURE(N);
      CAPTURE(k.m);
      CHECK(k.gamma_positive);
    }
}

TEST_CASE("kernel: real-rootedness" * doctest::test_suite("conjecture")) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& k : kernel_diagnostics(N, 10)) {
      CAPTURE(N);
      CAPTURE(k.m);
      CHECK(k.real_rooted);
    }
}

TEST_CASE("kernel: Dwork limit") {
  CHECK(dwork_limit_check(2, 8).pass);
  CHECK(dwork_limit_check(3, 6).pass);
  CHECK(dwork_limit_check(5, 3).pass);
}

TEST_CASE("kernel: three-variable operators" * doctest::test_suite("transcription-dependent")) {
  auto j = fixtures::load("pf3.json");
  std::vector<std::string> xyz = j["vars"].get<std::vector<std::string>>();
  for (const auto& [key, ops] : j["operators"].items()) {
    int N = std::stoi(key);
    int order = j["orders_checked"][key].get<int>();
    CAPTURE(N);
    auto r = verify_pf3(N, fixtures::polys(ops, xyz), order);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  // A perturbed operator must fail.
  auto op = fixtures::polys(j["operators"]["2"], xyz);
  op[0] += parse_polynomial("x", xyz);
  CHECK_FALSE(verify_pf3(2, op, 4).pass);
}

TEST_CASE("kernel: closed forms") {
  auto r2 = closed_form_check(2, 12);
  CHECK_MESSAGE(r2.pass, r2.detail);
  auto r3 = closed_form_check(3, 10);
  CHECK_MESSAGE(r3.pass, r3.detail);
  CHECK_THROWS_AS(closed_form_check(4, 2), UnsupportedError);
}

TEST_CASE("kernel: timing for N <= 5, m <= 12") {
  auto t0 = std::chrono::steady_clock::now();
  for (int N = 2; N <= 5; ++N) kernel_series(N, 12);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("kernel expansion N=2..5, m<=12: " << s << " s");
  CHECK(s < 60.0);
}
