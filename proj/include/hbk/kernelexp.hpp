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

#include "hbk/periods.hpp"
#include "hbk/polynomial.hpp"
#include "hbk/shaped.hpp"
#include "hbk/upoly.hpp"

namespace hbk {

// a_m(y, z) = P_m(y, z) / (z - y)^{N m + 1}.
struct KernelTerm {
  int m = 0;
  SparsePolynomial P;  // over (y, z), integral
  int denominator_exponent = 0;
  ShapedRational a;
};

// a_0..a_M from the z-recursion (-m)^N a_m = d/dz theta_z^{N-1} a_{m-1}.
// Results are cached per N; safe to call concurrently.
std::vector<ShapedRational> kernel_series(int N, int M);
// Same from the y-recursion.
std::vector<ShapedRational> kernel_series_y(int N, int M);
std::vector<KernelTerm> kernel_expansion(int N, int M);

// y-recursion against z-recursion, and the y-expansion of a_m against
// C(m+k, k)^N for k <= B.
CheckReport kernel_crosscheck(int N, int M, int B);
// Both PDEs, coefficientwise in x, through x^M.
CheckReport pde_check(int N, int M);

// P(t, 1) for a polynomial over (y, z); t stands for y.
UPolyQ dehomogenize(const SparsePolynomial& P);
// P(t,1) = Sum_k gamma_k t^k (1+t)^{d-2k}, d = deg P. DomainError unless palindromic.
std::vector<Integer> gamma_vector(const UPolyQ& p);
std::vector<Integer> gamma_vector(const KernelTerm& term);

struct KernelDiagnostics {
  int m = 0;
  int degree = 0;
  bool integral = false, palindromic = false, homogeneous = false, symmetric = false;
  bool extremes_one = false;
  std::vector<Integer> gamma;  // empty if not palindromic
  bool gamma_positive = false;
  long real_roots = 0;  // distinct real roots of P_m(t, 1)
  bool real_rooted = false;
  Integer row_sum;
  bool row_sum_ok = false;  // P_m(1,1) = (Nm)!/(m!)^N
};
std::vector<KernelDiagnostics> kernel_diagnostics(int N, int M);

CheckReport dwork_limit_check(int N, int M);

// d/dx-form operator P_0..P_D over (x, y, z) applied to the x-series.
CheckReport verify_pf3(int N, const std::vector<SparsePolynomial>& op, int orderX);
CheckReport closed_form_check(int N, int orderX);

}  // namespace hbk
