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

#include "hbk/kernelexp.hpp"

#include <map>
#include <mutex>

#include "hbk/errors.hpp"
#include "hbk/periods.hpp"

namespace hbk {

namespace {

ShapedRational step(const ShapedRational& prev, int N, int m, bool in_y) {
  ShapedRational a = prev;
  for (int i = 0; i < N - 1; ++i) a = in_y ? a.theta_y() : a.theta_z();
  a = in_y ? a.d_dy() : a.d_dz();
  Integer mN = 1;
  for (int i = 0; i < N; ++i) mN *= m;
  // d/dz theta_z^{N-1} z^{-s} = (-s)^N z^{-s-1}: the z-recursion carries (-1)^N.
  if (!in_y && N % 2) mN = -mN;
  return a * ShapedRational(Rational(1) / Rational(mN));
}

std::vector<ShapedRational> series_impl(int N, int M, bool in_y) {
  if (N < 2) throw DomainError("kernel expansion needs N >= 2");
  if (M < 0) throw DomainError("negative expansion order");
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<ShapedRational>> cache;
  std::vector<ShapedRational> a;
  {
    std::lock_guard<std::mutex> lock(mu);
    a = cache[{N, in_y}];
  }
  if (a.empty()) a.push_back(ShapedRational(SparsePolynomial(ShapedRational::vars(), 1), 1));
  std::size_t had = a.size();
  while (static_cast<int>(a.size()) <= M) {
    int m = static_cast<int>(a.size());
    a.push_back(step(a.back(), N, m, in_y));
  }
  if (a.size() > had) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{N, in_y}];
    if (slot.size() < a.size()) slot = a;
  }
  a.resize(static_cast<std::size_t>(M + 1));
  return a;
}

// Numerator over (z - y)^e, raising the exponent if needed.
SparsePolynomial over(const ShapedRational& a, int e) {
  if (a.is_zero()) return SparsePolynomial(ShapedRational::vars());
  if (a.denominator_exponent() > e) throw InvariantViolation("denominator exponent exceeds the common one");
  return a.full_numerator() * ShapedRational::z_minus_y().pow(static_cast<unsigned>(e - a.denominator_exponent()));
}

// Polynomial over (x, y, z) with x absent, rewritten over (y, z).
SparsePolynomial to_yz(const SparsePolynomial& p, std::size_t iy, std::size_t iz) {
  SparsePolynomial out(ShapedRational::vars());
  for (const auto& [e, c] : p.terms()) out.add_term({iy < e.size() ? e[iy] : 0, iz < e.size() ? e[iz] : 0}, c);
  return out;
}

}  // namespace

std::vector<ShapedRational> kernel_series(int N, int M) { return series_impl(N, M, false); }
std::vector<ShapedRational> kernel_series_y(int N, int M) { return series_impl(N, M, true); }

std::vector<KernelTerm> kernel_expansion(int N, int M) {
  auto a = kernel_series(N, M);
  std::vector<KernelTerm> out;
  for (int m = 0; m <= M; ++m) {
    KernelTerm t;
    t.m = m;
    t.a = a[m];
    t.denominator_exponent = N * m + 1;
    // Bring to the nominal exponent; P_m is coprime to z - y in practice.
    t.P = over(a[m], t.denominator_exponent);
    out.push_back(std::move(t));
  }
  return out;
}

CheckReport kernel_crosscheck(int N, int M, int B) {
  auto az = kernel_series(N, M), ay = kernel_series_y(N, M);
  for (int m = 0; m <= M; ++m)
    if (az[m] != ay[m])
      return {false, "y- and z-recursions differ at m = " + std::to_string(m)};
  // P_m / (z-y)^e = z^{-m-1} Sum_k S_k (y/z)^k, S_k = Sum_j p_j C(e-1+k-j, k-j).
  auto terms = kernel_expansion(N, M);
  for (const auto& t : terms) {
    int e = t.denominator_exponent;
    int d = t.m * (N - 1);
    std::vector<Rational> p(static_cast<std::size_t>(d + 1));
    for (const auto& [ex, c] : t.P.terms()) {
      if (ex[0] + ex[1] != d) return {false, "P_" + std::to_string(t.m) + " is not homogeneous"};
      p[ex[0]] = c;
    }
    for (int k = 0; k <= B; ++k) {
      Rational s = 0;
      for (int j = 0; j <= std::min(k, d); ++j) s += p[j] * Rational(binomial(e - 1 + k - j, k - j));
      Integer want = 1, b = binomial(t.m + k, k);
      for (int i = 0; i < N; ++i) want *= b;
      if (s != Rational(want))
        return {false, "y-expansion mismatch at (m, k) = (" + std::to_string(t.m) + ", " + std::to_string(k) + "): " +
                           s.get_str() + " vs " + want.get_str()};
    }
  }
  return {};
}

CheckReport pde_check(int N, int M) {
  auto a = kernel_series(N, M + 1);
  for (int m = 1; m <= M + 1; ++m) {
    Integer mN = 1;
    for (int i = 0; i < N; ++i) mN *= m;
    for (bool in_y : {false, true}) {
      ShapedRational lhs = a[m] * ShapedRational(Rational(!in_y && N % 2 ? -mN : mN));
      ShapedRational r = a[m - 1];
      for (int i = 0; i < N - 1; ++i) r = in_y ? r.theta_y() : r.theta_z();
      r = in_y ? r.d_dy() : r.d_dz();
      if (lhs != r)
        return {false, std::string(in_y ? "y" : "z") + "-equation fails at x^" + std::to_string(m - 1)};
    }
  }
  return {};
}

UPolyQ dehomogenize(const SparsePolynomial& P) {
  SparsePolynomial q = P.with_vars(ShapedRational::vars());
  std::vector<Rational> c;
  for (const auto& [e, v] : q.terms()) {
    if (static_cast<std::size_t>(e[0]) >= c.size()) c.resize(static_cast<std::size_t>(e[0]) + 1);
    c[static_cast<std::size_t>(e[0])] += v;
  }
  return UPolyQ(c);
}

std::vector<Integer> gamma_vector(const UPolyQ& p) {
  int d = p.degree();
  if (d < 0) throw DomainError("gamma vector of the zero polynomial");
  for (int j = 0; j <= d; ++j)
    if (p.coeff(j) != p.coeff(d - j)) throw DomainError("polynomial is not palindromic");
  std::vector<Rational> g;
  for (int j = 0; 2 * j <= d; ++j) {
    Rational s = p.coeff(j);
    for (int k = 0; k < j; ++k) s -= g[k] * Rational(binomial(d - 2 * k, j - k));
    g.push_back(s);
  }
  std::vector<Integer> out;
  for (const auto& x : g) {
    if (x.get_den() != 1) throw DomainError("gamma vector is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

std::vector<Integer> gamma_vector(const KernelTerm& term) { return gamma_vector(dehomogenize(term.P)); }

std::vector<KernelDiagnostics> kernel_diagnostics(int N, int M) {
  std::vector<KernelDiagnostics> out;
  SeriesQ dw = dwork_series(N, M);
  for (const auto& t : kernel_expansion(N, M)) {
    KernelDiagnostics k;
    k.m = t.m;
    k.degree = t.m * (N - 1);
    k.integral = t.P.has_integer_coefficients();
    k.homogeneous = true;
    for (const auto& [e, c] : t.P.terms())
      if (e[0] + e[1] != k.degree) k.homogeneous = false;
    SparsePolynomial sw(ShapedRational::vars());
    for (const auto& [e, c] : t.P.terms()) sw.add_term({e[1], e[0]}, c);
    k.symmetric = sw == t.P;
    UPolyQ p = dehomogenize(t.P);
    k.extremes_one = p.coeff(0) == 1 && p.coeff(k.degree) == 1;
    k.palindromic = p.degree() == k.degree;
    for (int j = 0; j <= p.degree() && k.palindromic; ++j)
      if (p.coeff(j) != p.coeff(p.degree() - j)) k.palindromic = false;
    if (k.palindromic && k.integral) {
      k.gamma = gamma_vector(p);
      k.gamma_positive = true;
      for (const auto& g : k.gamma)
        if (g <= 0) k.gamma_positive = false;
    }
    k.real_roots = sturm_count(p);
    k.real_rooted = k.real_roots == k.degree;
    Rational rs = 0;
    for (const auto& c : p.coeffs()) rs += c;
    k.row_sum = rs.get_num();
    k.row_sum_ok = rs == dw[t.m];
    out.push_back(std::move(k));
  }
  return out;
}

CheckReport dwork_limit_check(int N, int M) {
  // F((1-Y)^N t, Y) = Sum_m P_m(Y,1) t^m (1-Y)^{Nm} / (1-Y)^{Nm}; the limit Y -> 1 is P_m(1,1).
  SeriesQ dw = dwork_series(N, M);
  auto terms = kernel_expansion(N, M);
  for (const auto& t : terms) {
    Rational v = dehomogenize(t.P)(Rational(1));
    if (v != dw[t.m])
      return {false, "Dwork coefficient mismatch at t^" + std::to_string(t.m) + ": " + v.get_str() + " vs " +
                         dw[t.m].get_str()};
  }
  return {};
}

CheckReport verify_pf3(int N, const std::vector<SparsePolynomial>& op, int orderX) {
  if (op.empty()) throw DomainError("empty operator");
  std::size_t ix = op[0].var_index("x"), iy = op[0].var_index("y"), iz = op[0].var_index("z");
  const int D = static_cast<int>(op.size()) - 1;
  int E = 0;
  std::vector<std::vector<SparsePolynomial>> coef(op.size());
  for (std::size_t k = 0; k < op.size(); ++k) {
    int deg = op[k].is_zero() ? -1 : op[k].degree_in(ix);
    E = std::max(E, deg);
    for (int i = 0; i <= deg; ++i) {
      SparsePolynomial c(op[k].vars());
      for (const auto& [e, v] : op[k].terms())
        if (e[ix] == i) {
          Exponent ne = e;
          ne[ix] = 0;
          c.add_term(ne, v);
        }
      coef[k].push_back(to_yz(c, iy, iz));
    }
  }
  auto a = kernel_series(N, orderX + D);
  // [x^n] Sum_k P_k d^k/dx^k K = Sum_{k,i} [x^i]P_k (n-i+k)!/(n-i)! a_{n-i+k}.
  for (int n = 0; n <= orderX; ++n) {
    int e = 0;
    for (int k = 0; k <= D; ++k)
      for (int i = 0; i < static_cast<int>(coef[k].size()) && i <= n; ++i)
        e = std::max(e, a[n - i + k].denominator_exponent());
    SparsePolynomial sum(ShapedRational::vars());
    for (int k = 0; k <= D; ++k)
      for (int i = 0; i < static_cast<int>(coef[k].size()) && i <= n; ++i) {
        if (coef[k][i].is_zero()) continue;
        int m = n - i + k;
        Integer f = 1;
        for (int j = n - i + 1; j <= m; ++j) f *= j;
        sum += coef[k][i] * over(a[m], e) * Rational(f);
      }
    if (!sum.is_zero())
      return {false, "operator residual at x^" + std::to_string(n) + ": " + ShapedRational(sum, e).to_string()};
  }
  return {};
}

CheckReport closed_form_check(int N, int orderX) {
  const auto& v = ShapedRational::vars();
  SparsePolynomial y = SparsePolynomial::variable(v, 0), z = SparsePolynomial::variable(v, 1);
  auto a = kernel_series(N, orderX);
  if (N == 2) {
    // K^2 (x^2 - 2x(y+z) + (y-z)^2) = 1.
    std::vector<ShapedRational> sq(static_cast<std::size_t>(orderX + 1));
    for (int n = 0; n <= orderX; ++n)
      for (int i = 0; i <= n; ++i) sq[n] = sq[n] + a[i] * a[n - i];
    std::vector<ShapedRational> q{ShapedRational((y - z).pow(2), 0), ShapedRational((y + z) * Rational(-2), 0),
                                  ShapedRational(1)};
    for (int n = 0; n <= orderX; ++n) {
      ShapedRational s;
      for (int i = 0; i <= std::min(2, n); ++i) s = s + q[i] * sq[n - i];
      if (s != ShapedRational(n == 0 ? 1 : 0))
        return {false, "K^2 Q differs from 1 at x^" + std::to_string(n) + ": " + s.to_string()};
    }
    // y = 0 slice: a_m(0, z) = z^{-m-1}, so P_m(0, z) = z^{e-m-1}.
    for (int m = 0; m <= orderX; ++m) {
      SparsePolynomial num = a[m].full_numerator().substitute(0, Rational(0));
      if (num != SparsePolynomial::variable(v, 1, a[m].denominator_exponent() - m - 1))
        return {false, "y = 0 slice differs at x^" + std::to_string(m)};
    }
    return {};
  }
  if (N == 3) {
    // K = -Sum_n (3n)!/(n!)^3 (-xyz)^n (x + y - z)^{-3n-1}, with
    // (x + y - z)^{-s} = Sum_j C(-s, j) x^j (y - z)^{-s-j}.
    std::vector<ShapedRational> k(static_cast<std::size_t>(orderX + 1));
    for (int n = 0; n <= orderX; ++n) {
      Integer c = 1;
      for (int i = 1; i <= 3 * n; ++i) c *= i;
      Integer nf = 1;
      for (int i = 1; i <= n; ++i) nf *= i;
      Rational coef = Rational(c) / Rational(nf * nf * nf);
      if (n % 2) coef = -coef;
      int s = 3 * n + 1;
      SparsePolynomial yz = (y * z).pow(static_cast<unsigned>(n));
      for (int j = 0; n + j <= orderX; ++j) {
        // C(-s, j) = (-1)^j C(s + j - 1, j); (y - z)^{-s-j} = (-1)^{s+j} (z - y)^{-s-j}.
        Rational b = Rational(binomial(s + j - 1, j));
        if (j % 2) b = -b;
        if ((s + j) % 2) b = -b;
        k[n + j] = k[n + j] + ShapedRational(yz, s + j, -coef * b);
      }
    }
    for (int m = 0; m <= orderX; ++m)
      if (k[m] != a[m]) return {false, "hypergeometric form differs at x^" + std::to_string(m)};
    return {};
  }
  throw UnsupportedError("closed forms are known for N = 2, 3 only");
}

}  // namespace hbk
