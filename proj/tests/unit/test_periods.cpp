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

#include <filesystem>

#include "hbk/errors.hpp"
#include "hbk/periods.hpp"

using namespace hbk;

namespace {

PotentialSpec diag(int N) {
  PotentialSpec s;
  s.N = N;
  return s;
}

// Independent oracle: sum of binomial powers by Pascal's triangle.
Integer pascal_sum(int N, int i, long r = 1) {
  std::vector<Integer> row{1};
  for (int k = 0; k < i; ++k) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = next;
  }
  Integer s = 0, rp = 1;
  for (auto& b : row) {
    Integer t = 1;
    for (int k = 0; k < N; ++k) t *= b;
    s += t * rp;
    rp *= r;
  }
  return s;
}

}  // namespace

TEST_CASE("phi and dwork series") {
  auto p1 = phi_series(1, 3);
  CHECK(p1[3] == Rational(1, 6));
  auto p2 = phi_series(2, 2);
  CHECK(p2[2] == Rational(1, 4));
  CHECK(phi_series(3, 2)[2] == Rational(1, 8));
  auto d2 = dwork_series(2, 4);
  CHECK(d2[4] == 70);
  CHECK(dwork_series(3, 2)[2] == 90);
  CHECK(dwork_series(5, 1)[1] == 120);
}

TEST_CASE("potential shapes") {
  auto v2 = build_potential(diag(2));
  CHECK(v2.terms().size() == 3);
  CHECK(v2.coeff({0}) == 2);
  CHECK(v2.coeff({1}) == 1);
  CHECK(v2.coeff({-1}) == 1);
  auto v3 = build_potential(diag(3));
  CHECK(v3.terms().size() == 7);  // 8 monomials, the two constants merge
  CHECK(v3.coeff({0, 0}) == 2);
  PotentialSpec d = diag(2);
  d.deformed = true;
  auto w = build_potential(d);
  REQUIRE(w.vars().size() == 2);
  CHECK(w.coeff({0, 1}) == 1);
  CHECK(w.coeff({1, 1}) == 1);
  CHECK(w.coeff({0, 0}) == 1);
  CHECK(w.coeff({-1, 0}) == 1);
  PotentialSpec bad = diag(1);
  CHECK_THROWS_AS(build_potential(bad), DomainError);
  PotentialSpec mf = diag(3);
  mf.m = 3;
  CHECK(build_potential(mf).vars().size() == 4 + 3);
}

TEST_CASE("constant term examples") {
  CHECK(period_constant_term(diag(2), 3) == UPolyQ(20));
  CHECK(period_constant_term(diag(3), 2) == UPolyQ(10));
  for (int N = 2; N <= 5; ++N) CHECK(period_constant_term(diag(N), 0) == UPolyQ(1));
  CHECK(period_fast(diag(2), 4) == UPolyQ(70));
  CHECK(period_fast(diag(3), 3) == UPolyQ(56));
  PotentialSpec d = diag(4);
  d.deformed = true;
  CHECK(period_fast(d, 2) == UPolyQ({1, 16, 1}));
  CHECK(kernel_coefficient(2, {2, 1}) == 9);
  CHECK(kernel_coefficient(5, {1, 1}) == 32);
  CHECK(kernel_coefficient(3, {1, 1, 1}) == 216);
}

TEST_CASE("support guard") {
  OracleOptions opt;
  opt.max_support = 50;
  CHECK_THROWS_AS(period_constant_term(diag(4), 8, opt), ResourceError);
}

TEST_CASE("oracle equivalence diagonal") {
  for (int N = 2; N <= 5; ++N) {
    CoefficientStream fast(diag(N), CoefficientStream::Provenance::BinomialClosedForm);
    CoefficientStream slow(diag(N), CoefficientStream::Provenance::ConstantTermOracle);
    auto a = fast.take_rational(13);
    auto b = slow.take_rational(13);
    for (int i = 0; i <= 12; ++i) {
      CHECK(a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
      CHECK(a[static_cast<std::size_t>(i)] == Rational(pascal_sum(N, i)));
    }
  }
}

TEST_CASE("oracle equivalence deformed and r = 1") {
  for (int N = 2; N <= 4; ++N) {
    PotentialSpec d = diag(N);
    d.deformed = true;
    for (int i = 0; i <= 6; ++i) CHECK(period_constant_term(d, i) == period_fast(d, i));
    for (int i = 0; i <= 10; ++i) {
      UPolyQ p = period_fast(d, i);
      CHECK(p(Rational(1)) == Rational(pascal_sum(N, i)));
      PotentialSpec s = d;
      s.r_value = Rational(1);
      CHECK(period_fast(s, i) == UPolyQ(Rational(pascal_sum(N, i))));
    }
    PotentialSpec s = d;
    s.r_value = Rational(-2);
    for (int i = 0; i <= 5; ++i) CHECK(period_constant_term(s, i) == UPolyQ(Rational(pascal_sum(N, i, -2))));
  }
}

TEST_CASE("oracle equivalence m-fold") {
  for (int N = 2; N <= 5; ++N)
    for (int m = 2; (N - 1) * (m - 1) <= 4; ++m) {
      PotentialSpec s = diag(N);
      s.m = m;
      if (m == 2) continue;  // m = 2 uses the diagonal form
      for (int i = 0; i <= 6; ++i) CHECK(period_constant_term(s, i) == period_fast(s, i));
      s.weights.clear();
      for (int l = 1; l <= m; ++l) s.weights.push_back(Rational(l, 3));
      for (int i = 0; i <= 4; ++i) CHECK(period_constant_term(s, i) == period_fast(s, i));
    }
}

TEST_CASE("product identity") {
  CHECK(product_identity_check(2, 6).pass);
  CHECK(product_identity_check(1, 6).pass);
  CHECK(product_identity_check(4, 5).pass);
}

TEST_CASE("stream counters and cache") {
  CoefficientStream s(diag(4), CoefficientStream::Provenance::ConstantTermOracle);
  s.take(5);
  s.take(11);
  s.take(8);
  CHECK(s.coefficients_computed() == 11);
  CHECK(s.laurent_products() == 5);  // powers up to V^5

  auto dir = std::filesystem::temp_directory_path() / "hbk_cache_test";
  std::filesystem::remove_all(dir);
  PotentialSpec d = diag(3);
  d.deformed = true;
  CoefficientStream a(d, CoefficientStream::Provenance::BinomialClosedForm);
  a.set_cache_dir(dir.string());
  auto ca = a.take(9);
  CHECK(std::filesystem::exists(dir / "periods" / "N3m2r" / "coeffs.json"));
  CoefficientStream b(d, CoefficientStream::Provenance::BinomialClosedForm);
  b.set_cache_dir(dir.string());
  auto cb = b.take(9);
  CHECK(b.cache_hits() == 9);
  CHECK(b.coefficients_computed() == 0);
  CHECK(ca == cb);
  std::filesystem::remove_all(dir);
}
