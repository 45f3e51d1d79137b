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

#include <complex>
#include <map>
#include <random>

#include "hbk/errors.hpp"
#include "hbk/guessing.hpp"
#include "hbk/loci.hpp"
#include "hbk/parse.hpp"
#include "hbk/periods.hpp"

using namespace hbk;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

SparsePolynomial xyz(const std::string& s) { return parse_polynomial(s, kXYZ); }

// Floating-point product of the N^2 complex line factors at (u, v, w).
std::complex<double> line_product(int N, double u, double v, double w) {
  const double pi = std::acos(-1.0);
  std::complex<double> p = 1;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      p *= u + std::polar(1.0, 2 * pi * a / N) * v + std::polar(1.0, 2 * pi * b / N) * w;
  return p;
}

UPolyQ leading_coefficient(int N) {
  PotentialSpec s;
  s.N = N;
  CoefficientStream st(s, CoefficientStream::Provenance::BinomialClosedForm);
  auto op = guess_operator(st.take_rational(N <= 4 ? 60 : 120), GuessConfig{});
  REQUIRE(op);
  return UPolyQ::from_sparse(op->coeff(op->order()), "t");
}

// Squarefree part with the t factor removed.
UPolyQ radical_off_zero(const UPolyQ& p) {
  UPolyQ r = p.squarefree_part(), q, rem;
  UPolyQ::divmod(r, UPolyQ::x(), &q, &rem);
  return rem.is_zero() ? q.monic() : r;
}

}  // namespace

TEST_CASE("loci: delta for small N") {
  CHECK(delta(2) == xyz("x^2 + y^2 + z^2 - 2x y - 2x z - 2y z"));
  CHECK(delta(3) == xyz("(x + y + z)^3 - 27 x y z"));
  CHECK(delta(4).coeff({2, 1, 1}) == -124);
  CHECK_THROWS_AS(delta(1), DomainError);
}

TEST_CASE("loci: delta against the complex line product") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 5);
  for (int N = 2; N <= 5; ++N)
    for (int trial = 0; trial < 4; ++trial) {
      int u = d(rng), v = d(rng), w = d(rng);
      auto p = line_product(N, u, v, w);
      Rational x = Rational(u), y = Rational(v), z = Rational(w);
      auto pw = [N](Rational a) {
        Rational r = 1;
        for (int i = 0; i < N; ++i) r *= a;
        return r;
      };
      double val = delta(N).evaluate({pw(x), pw(y), pw(z)}).get_d();
      CAPTURE(N);
      // Cancellation is bounded by the size of the factors.
      double scale = std::pow(double(u + v + w), N * N);
      CHECK(std::abs(p.imag()) < 1e-12 * scale);
      CHECK(std::abs(p.real() - val) < 1e-12 * scale);
    }
}

TEST_CASE("loci: Delta is symmetric of degree N with unit pure powers") {
  for (int N = 2; N <= 6; ++N) {
    SparsePolynomial d = delta(N);
    CHECK(d.total_degree() == N);
    CHECK(d.coeff({N, 0, 0}) == 1);
    CHECK(d.coeff({0, N, 0}) == 1);
    CHECK(d.coeff({0, 0, N}) == 1);
    for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}) {
      SparsePolynomial q(kXYZ);
      for (const auto& [e, c] : d.terms()) q.add_term({e[perm[0]], e[perm[1]], e[perm[2]]}, c);
      CHECK(q == d);
    }
  }
}

TEST_CASE("loci: discriminant identity") {
  CHECK(t_discriminant(2) == xyz("(x + y - z)^2 - 4 x y"));
  for (int N = 2; N <= 5; ++N) {
    auto r = discriminant_identity(N);
    CAPTURE(N);
    CHECK_MESSAGE(r.pass, r.detail);
    // The unsigned form holds only for even N.
    CHECK(discriminant_identity(N, true).pass == (N % 2 == 0));
  }
}

TEST_CASE("loci: singular points") {
  auto p3 = singular_points(3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].point == ProjectivePoint::make({CyclotomicNumber(3, 1), CyclotomicNumber(3, 1), CyclotomicNumber(3, 1)}));
  for (int N = 3; N <= 6; ++N) {
    auto pts = singular_points(N);
    CAPTURE(N);
    CHECK(pts.size() == static_cast<std::size_t>((N - 1) * (N - 2) / 2));
    for (const auto& s : pts) {
      CHECK(s.point.galois_real());
      CHECK(s.hessian_rank == 2);
      CHECK(on_delta(N, s.point));
    }
  }
  CHECK_THROWS_AS(singular_points(2), DomainError);
}

TEST_CASE("loci: closed-form fixture points are off the locus at N = 3") {
  auto c = closed_form_points(3);
  REQUIRE(!c.empty());
  bool any_on = false;
  for (const auto& p : c) any_on = any_on || on_delta(3, p);
  CHECK_FALSE(any_on);
}

TEST_CASE("loci: group-law divisor") {
  CHECK(group_law_divisor(2) == delta(2));
  CHECK(group_law_divisor(3) == xyz("(z - x - y)^3 - 27 x y z"));
  for (int N = 2; N <= 5; ++N) {
    auto r = group_law_relation(N);
    CAPTURE(N);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("loci: multi-variable degeneration") {
  auto r = degeneration_check(2, 3);
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(delta(2, 3).total_degree() == 4);
  auto r3 = degeneration_check(3, 3);
  CHECK_MESSAGE(r3.pass, r3.detail);
}

TEST_CASE("loci: diagonal specialization matches operator singularities") {
  for (int N = 2; N <= 4; ++N) {
    CAPTURE(N);
    CHECK(diagonal_delta(N).squarefree_part() == radical_off_zero(leading_coefficient(N)));
  }
  // N = 5: the operator's singular factor divides Delta_5(t, t, -1).
  UPolyQ lead = radical_off_zero(leading_coefficient(5));
  UPolyQ g = UPolyQ::gcd(lead, diagonal_delta(5));
  // (32t - 1)(t^2 - 11t - 1), from the operator, must divide Delta_5(t, t, -1).
  CHECK(g.degree() == 3);
  MESSAGE("N=5 leading coefficient radical: " << lead.to_string("t") << ", gcd with Delta_5(t,t,-1): " << g.to_string("t"));
}
