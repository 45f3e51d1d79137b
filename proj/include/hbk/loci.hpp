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

#include <string>
#include <vector>

#include "hbk/cyclotomic.hpp"
#include "hbk/periods.hpp"
#include "hbk/polynomial.hpp"

namespace hbk {

// Variables of delta(N, m): {x, y, z} for m = 2, else x0..xm.
std::vector<std::string> locus_vars(int m);

// Delta_N: Prod over (m)-tuples of N-th roots of unity of
// u_0 + w_1 u_1 + ... + w_m u_m, rewritten in x_i = u_i^N. Primitive, with the
// pure powers of each variable at coefficient +1.
SparsePolynomial delta(int N, int m = 2);

// disc_T(x T^{N-1}(1+T)^{N-1} + y (1+T)^{N-1} - z T^{N-1})
//   == (-1)^N (N-1)^{2(N-1)} (xyz)^{N-2} Delta_N(x, y, (-1)^N z).
// With literal = true the last argument is z; that form fails for odd N.
CheckReport discriminant_identity(int N, bool literal = false);
SparsePolynomial t_discriminant(int N);

// Homogeneous coordinates over Q(zeta_N), canonical: first nonzero entry 1.
struct ProjectivePoint {
  std::vector<CyclotomicNumber> coords;

  static ProjectivePoint make(std::vector<CyclotomicNumber> c);  // canonicalizes
  bool galois_real() const;  // fixed by zeta -> zeta^{-1}
  bool rational() const;
  std::string to_string() const;
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords == b.coords; }
};

struct SingularPoint {
  ProjectivePoint point;  // in x-space
  int hessian_rank = 0;   // 2 for a node
  int line_pairs = 0;     // pairs of u-space lines meeting over this point
};

// Double points of Delta_N = 0 off the coordinate triangle, from pairwise
// intersections of the lines u + a v + b w = 0. Each is checked against
// Delta_N and its gradient (InvariantViolation otherwise).
std::vector<SingularPoint> singular_points(int N);

// [(1 - ab)^N : (-1)^N (1 - a)^N : (1 - b)^N] over pairs of nontrivial N-th
// roots a, b with ab != 1. Kept for comparison only: these need not lie on
// Delta_N (they do not for N = 3).
std::vector<ProjectivePoint> closed_form_points(int N);
bool on_delta(int N, const ProjectivePoint& p);

// Res_s(s^N - y, z - (u + s)^N) in x = u^N, primitive, z^N at +1.
SparsePolynomial group_law_divisor(int N);

// D_N(x, y, z) == (-1)^N Delta_N(x, y, (-1)^N z).
CheckReport group_law_relation(int N);
// Delta(N, m) at x_m = 0 equals Delta(N, m-1)^N.
CheckReport degeneration_check(int N, int m);
// Delta_N(t, t, (-1)^N) as a polynomial in t.
UPolyQ diagonal_delta(int N);

}  // namespace hbk
