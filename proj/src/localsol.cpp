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

#include "hbk/localsol.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "hbk/errors.hpp"
#include "hbk/linalg.hpp"

namespace hbk {

LocalPoint LocalPoint::at(const Rational& c) {
  if (c == 0) return zero();
  return {Kind::Finite, c};
}

std::string LocalPoint::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "infinity";
    case Kind::Finite: break;
  }
  return c.get_str();
}

std::vector<Rational> IndicialData::exponents() const {
  std::vector<Rational> out;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.root);
  return out;
}

int IndicialData::leftover_degree() const {
  if (leftover.is_zero()) return -1;
  return leftover.degree_in(leftover.nvars() - 1);
}

namespace {

std::vector<std::string> other_vars(const ThetaOperator& op) {
  std::vector<std::string> rest;
  for (const auto& v : op.vars())
    if (v != op.main_var()) rest.push_back(v);
  return rest;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Rational roots of a polynomial in (rest..., lambda), checked symbolically.
void split_roots(IndicialData* out) {
  const SparsePolynomial& p = out->polynomial;
  std::size_t lam = p.nvars() - 1;
  UPolyQ spec;
  // Specialize the other variables to find candidates; retry on degenerate points.
  for (int attempt = 0; attempt < 8; ++attempt) {
    SparsePolynomial q = p;
    for (std::size_t i = 0; i < lam; ++i) q = q.substitute(i, Rational(3 + 2 * static_cast<long>(i) + attempt, 7 + 4 * attempt));
    spec = UPolyQ::from_sparse(q, p.vars()[lam]);
    if (spec.degree() == p.degree_in(lam)) break;
  }
  SparsePolynomial rest = p;
  if (!spec.is_zero() && spec.degree() > 0) {
    for (const auto& rm : rational_roots(spec).roots) {
      SparsePolynomial lin = SparsePolynomial::variable(p.vars(), lam) - SparsePolynomial(p.vars(), rm.root);
      int m = 0;
      SparsePolynomial quo;
      while (m < rm.multiplicity && SparsePolynomial::divides(lin, rest, &quo)) {
        rest = quo;
        ++m;
      }
      if (m > 0) out->roots.push_back({rm.root, m});
    }
  }
  out->leftover = rest;
}

SparsePolynomial falling(const std::vector<std::string>& vars, std::size_t lam, int k) {
  SparsePolynomial f(vars, 1);
  for (int i = 0; i < k; ++i) f *= SparsePolynomial::variable(vars, lam) - SparsePolynomial(vars, i);
  return f;
}

// Taylor data of Q_e(m + N) for the nilpotent shift N: coefficient of N^i.
class LocalRecurrence {
 public:
  explicit LocalRecurrence(const ThetaOperator& op) : D_(op.order()), E_(op.degree()) {
    if (op.vars().size() != 1) throw DomainError("local solutions need an operator in one variable");
    a_.assign(static_cast<std::size_t>(E_ + 1), std::vector<Rational>(static_cast<std::size_t>(D_ + 1)));
    for (int e = 0; e <= E_; ++e)
      for (int d = 0; d <= D_; ++d) a_[e][d] = op.coefficient(d, e).constant_value();
  }
  int order() const { return D_; }
  int degree() const { return E_; }
  Rational taylor(int e, int m, int i) const {
    Rational s = 0;
    Rational mm = m;
    for (int d = i; d <= D_; ++d) {
      if (a_[e][d] == 0) continue;
      Rational pw = 1;
      for (int k = 0; k < d - i; ++k) pw *= mm;
      s += a_[e][d] * binom(d, i) * pw;
    }
    return s;
  }
  UPolyQ q0() const { return UPolyQ(a_[0]); }

 private:
  int D_, E_;
  std::vector<std::vector<Rational>> a_;
};

// Coefficient arrays c[n][j] (j < D) with the recursion extended to n = T.
using LogCoeffs = std::vector<VectorQ>;

void extend(const LocalRecurrence& rec, LogCoeffs& c, int from, int T) {
  const int D = rec.order(), E = rec.degree();
  c.resize(static_cast<std::size_t>(T + 1), VectorQ(static_cast<std::size_t>(D), Rational(0)));
  for (int n = from; n <= T; ++n) {
    VectorQ rhs(static_cast<std::size_t>(D), Rational(0));
    for (int e = 1; e <= std::min(E, n); ++e) {
      const VectorQ& prev = c[n - e];
      for (int i = 0; i < D; ++i) {
        Rational q = rec.taylor(e, n - e, i);
        if (q == 0) continue;
        for (int j = 0; j + i < D; ++j)
          if (prev[j + i] != 0) rhs[j] -= q * prev[j + i];
      }
    }
    VectorQ q(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i) q[i] = rec.taylor(0, n, i);
    if (q[0] == 0) throw InvariantViolation("recursion reached an exponent past the initial block");
    VectorQ& cur = c[n];
    for (int j = D - 1; j >= 0; --j) {
      Rational s = rhs[j];
      for (int i = 1; j + i < D; ++i) s -= q[i] * cur[j + i];
      cur[j] = s / q[0];
    }
  }
}

std::vector<SeriesQ> to_series(const LogCoeffs& c, const std::string& var) {
  int T = static_cast<int>(c.size()) - 1;
  int depth = 0;
  for (const auto& row : c)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) depth = std::max(depth, static_cast<int>(j));
  std::vector<SeriesQ> out;
  for (int j = 0; j <= depth; ++j) {
    SeriesQ s(var, T);
    for (int n = 0; n <= T; ++n) s[n] = c[n][j];
    out.push_back(std::move(s));
  }
  return out;
}

// Small dense helpers over Q.
// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(MatrixQ& a) {
  std::vector<std::size_t> piv;
  std::size_t row = 0, cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

MatrixQ inverse(const MatrixQ& m) {
  std::size_t n = m.size();
  MatrixQ aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  auto piv = rref_in_place(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvariantViolation("singular coordinate block");
  MatrixQ out(n, VectorQ(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

MatrixQ identity(int n) {
  MatrixQ m(n, VectorQ(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatrixQ mul(const MatrixQ& a, const MatrixQ& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatrixQ c(n, VectorQ(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

VectorQ mat_vec(const MatrixQ& a, const VectorQ& v) {
  VectorQ out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

std::vector<VectorQ> kernel(const MatrixQ& m, std::size_t cols) {
  if (m.empty()) {
    std::vector<VectorQ> out;
    for (std::size_t i = 0; i < cols; ++i) {
      VectorQ e(cols, Rational(0));
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  NullspaceOptions opt;
  opt.mode = NullspaceOptions::Mode::Exact;
  return rational_nullspace(m, opt);
}

// Some v with m v = b, or nullopt.
std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b) {
  MatrixQ aug = m;
  std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(-b[i]);
  for (const auto& v : kernel(aug, n + 1)) {
    if (v[n] == 0) continue;
    VectorQ x(v.begin(), v.begin() + static_cast<long>(n));
    for (auto& xi : x) xi /= v[n];
    return x;
  }
  return std::nullopt;
}

struct Bottom {
  VectorQ coords;  // in the solution space
  VectorQ g;       // analytic initial data c_{n,0}, n <= rho_max
  int pivot = 0;
  int size = 0;
};

class FrobeniusSystem {
 public:
  explicit FrobeniusSystem(const ThetaOperator& op) : rec_(op), var_(op.main_var()) {
    D_ = rec_.order();
    if (D_ < 1) throw DomainError("operator of order zero has no solutions");
    UPolyQ q0 = rec_.q0();
    if (q0.degree() != D_) throw UnsupportedError("t = 0 is not a regular singular point");
    auto rr = rational_roots(q0);
    if (rr.leftover.degree() > 0) throw UnsupportedError("exponent outside Q at t = 0: factor " + rr.leftover.to_string("lambda"));
    rho_max_ = 0;
    for (const auto& r : rr.roots) {
      if (r.root.get_den() != 1 || r.root < 0)
        throw UnsupportedError("exponent " + r.root.get_str() + " at t = 0 is not a non-negative integer");
      rho_max_ = std::max(rho_max_, static_cast<int>(r.root.get_num().get_si()));
    }
    build_basis();
    build_monodromy();
  }

  int order() const { return D_; }
  int rho_max() const { return rho_max_; }

  // Initial data of the combination coords.
  LogCoeffs initial(const VectorQ& coords) const {
    LogCoeffs c(static_cast<std::size_t>(rho_max_ + 1), VectorQ(static_cast<std::size_t>(D_), Rational(0)));
    for (int b = 0; b < D_; ++b) {
      if (coords[b] == 0) continue;
      for (int n = 0; n <= rho_max_; ++n)
        for (int j = 0; j < D_; ++j) c[n][j] += coords[b] * basis_[b][unknown(n, j)];
    }
    return c;
  }
  LogSolution solution(const VectorQ& coords, int T) const {
    LogCoeffs c = initial(coords);
    extend(rec_, c, rho_max_ + 1, T);
    LogSolution s;
    s.phi = to_series(c, var_);
    return s;
  }

  // Functional: coefficient (n, j) of the solution with coordinates v.
  VectorQ functional(int n, int j) const {
    VectorQ row(static_cast<std::size_t>(D_));
    for (int b = 0; b < D_; ++b) row[b] = basis_[b][unknown(n, j)];
    return row;
  }
  const MatrixQ& monodromy_log() const { return M_; }

 private:
  std::size_t unknown(int n, int j) const { return static_cast<std::size_t>(n * D_ + j); }

  void build_basis() {
    std::size_t nu = unknown(rho_max_ + 1, 0);
    MatrixQ sys;
    for (int n = 0; n <= rho_max_; ++n)
      for (int j = 0; j < D_; ++j) {
        VectorQ row(nu, Rational(0));
        for (int e = 0; e <= std::min(rec_.degree(), n); ++e)
          for (int i = 0; j + i < D_; ++i) {
            Rational q = rec_.taylor(e, n - e, i);
            if (q != 0) row[unknown(n - e, j + i)] += q;
          }
        sys.push_back(std::move(row));
      }
    basis_ = kernel(sys, nu);
    if (static_cast<int>(basis_.size()) != D_)
      throw InvariantViolation("local solution space has dimension " + std::to_string(basis_.size()) + ", expected " +
                               std::to_string(D_));
    // Rebase so the coordinates of a solution are its values at D chosen unknowns.
    MatrixQ bt = basis_;
    std::vector<std::size_t> piv = rref_in_place(bt);
    free_ = piv;
    MatrixQ sub(static_cast<std::size_t>(D_), VectorQ(static_cast<std::size_t>(D_)));
    for (int r = 0; r < D_; ++r)
      for (int b = 0; b < D_; ++b) sub[r][b] = basis_[b][free_[r]];
    MatrixQ inv = inverse(sub);
    std::vector<VectorQ> rebased(static_cast<std::size_t>(D_), VectorQ(nu, Rational(0)));
    for (int c = 0; c < D_; ++c)
      for (int b = 0; b < D_; ++b)
        if (inv[b][c] != 0)
          for (std::size_t k = 0; k < nu; ++k) rebased[c][k] += inv[b][c] * basis_[b][k];
    basis_ = std::move(rebased);
  }

  void build_monodromy() {
    // N shifts the log index down: (N c)_{n,j} = c_{n,j+1}.
    M_.assign(static_cast<std::size_t>(D_), VectorQ(static_cast<std::size_t>(D_), Rational(0)));
    for (int b = 0; b < D_; ++b)
      for (int r = 0; r < D_; ++r) {
        std::size_t k = free_[r];
        int n = static_cast<int>(k) / D_, j = static_cast<int>(k) % D_;
        M_[r][b] = j + 1 < D_ ? basis_[b][unknown(n, j + 1)] : Rational(0);
      }
  }

  LocalRecurrence rec_;
  std::string var_;
  int D_ = 0, rho_max_ = 0;
  std::vector<VectorQ> basis_;
  std::vector<std::size_t> free_;
  MatrixQ M_;
};

// Row-reduce new vectors against fixed bottoms and among themselves.
std::vector<Bottom> new_bottoms(const FrobeniusSystem& fs, const std::vector<Bottom>& fixed, std::vector<VectorQ> cand,
                                int size) {
  const int R = fs.rho_max();
  std::vector<VectorQ> g_rows;
  for (const auto& z : cand) {
    LogCoeffs c = fs.initial(z);
    VectorQ g(static_cast<std::size_t>(R + 1));
    for (int n = 0; n <= R; ++n) g[n] = c[n][0];
    g_rows.push_back(std::move(g));
  }
  auto axpy = [](VectorQ& x, const Rational& a, const VectorQ& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a * y[i];
  };
  for (std::size_t r = 0; r < cand.size(); ++r)
    for (const auto& p : fixed) {
      Rational f = g_rows[r][p.pivot];
      if (f == 0) continue;
      axpy(g_rows[r], f, p.g);
      axpy(cand[r], f, p.coords);
    }
  std::vector<Bottom> out;
  std::vector<bool> used(cand.size(), false);
  for (int col = 0; col <= R; ++col) {
    std::size_t piv = cand.size();
    for (std::size_t r = 0; r < cand.size(); ++r)
      if (!used[r] && g_rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == cand.size()) continue;
    used[piv] = true;
    Rational inv = 1 / g_rows[piv][col];
    for (auto& x : g_rows[piv]) x *= inv;
    for (auto& x : cand[piv]) x *= inv;
    for (std::size_t r = 0; r < cand.size(); ++r) {
      if (r == piv || g_rows[r][col] == 0) continue;
      Rational f = g_rows[r][col];
      axpy(g_rows[r], f, g_rows[piv]);
      axpy(cand[r], f, cand[piv]);
    }
    for (auto& b : out)
      if (b.g[col] != 0) {
        Rational f = b.g[col];
        axpy(b.g, f, g_rows[piv]);
        axpy(b.coords, f, cand[piv]);
      }
    out.push_back({cand[piv], g_rows[piv], col, size});
  }
  return out;
}

// Chain top v with M^{s-1} v = bottom, normalized greedily.
VectorQ chain_top(const FrobeniusSystem& fs, const Bottom& b, const std::vector<int>& head_indices) {
  const int D = fs.order(), s = b.size;
  const MatrixQ& M = fs.monodromy_log();
  std::vector<MatrixQ> powers{identity(D)};
  for (int k = 1; k < s; ++k) powers.push_back(mul(M, powers.back()));
  auto v = solve(powers[s - 1], b.coords);
  if (!v) throw InvariantViolation("Jordan chain top does not exist");
  VectorQ top = *v;
  std::vector<VectorQ> freedom = s > 1 ? kernel(powers[s - 1], static_cast<std::size_t>(D)) : std::vector<VectorQ>{};
  if (s == 1) return top;

  // Functional on v: entry (n, j) of y_k = M^{s-1-k} v.
  auto impose = [&](int k, int n, int j) {
    if (freedom.empty()) return;
    VectorQ row = fs.functional(n, j);
    VectorQ phi(static_cast<std::size_t>(D), Rational(0));
    const MatrixQ& P = powers[s - 1 - k];
    for (int c = 0; c < D; ++c)
      for (int r = 0; r < D; ++r) phi[c] += row[r] * P[r][c];
    auto dot = [&](const VectorQ& x) {
      Rational acc = 0;
      for (int i = 0; i < D; ++i) acc += phi[i] * x[i];
      return acc;
    };
    std::vector<Rational> w;
    std::size_t p = freedom.size();
    for (std::size_t i = 0; i < freedom.size(); ++i) {
      w.push_back(dot(freedom[i]));
      if (p == freedom.size() && w.back() != 0) p = i;
    }
    if (p == freedom.size()) return;
    Rational val = dot(top);
    for (int i = 0; i < D; ++i) top[i] -= val / w[p] * freedom[p][i];
    for (std::size_t q = 0; q < freedom.size(); ++q) {
      if (q == p || w[q] == 0) continue;
      for (int i = 0; i < D; ++i) freedom[q][i] -= w[q] / w[p] * freedom[p][i];
    }
    freedom.erase(freedom.begin() + static_cast<long>(p));
  };

  for (int k = 1; k < s; ++k) impose(k, b.pivot, 0);
  for (int h : head_indices)
    for (int k = 1; k < s; ++k)
      if (h != b.pivot) impose(k, h, 0);
  for (int j = 0; j < D && !freedom.empty(); ++j)
    for (int k = 1; k < s; ++k)
      for (int n = 0; n <= fs.rho_max(); ++n) impose(k, n, j);
  if (!freedom.empty()) throw InvariantViolation("chain normalization left free parameters");
  return top;
}

struct Chains {
  std::vector<Bottom> bottoms;
  std::vector<VectorQ> tops;
};

Chains build_chains(const FrobeniusSystem& fs) {
  const int D = fs.order();
  const MatrixQ& M = fs.monodromy_log();
  std::vector<MatrixQ> powers{identity(D)};
  while (true) {
    MatrixQ next = mul(M, powers.back());
    bool zero = true;
    for (const auto& r : next)
      for (const auto& x : r)
        if (x != 0) zero = false;
    powers.push_back(next);
    if (zero) break;
  }
  int smax = static_cast<int>(powers.size()) - 1;
  std::vector<Bottom> bottoms;
  for (int s = smax; s >= 1; --s) {
    // ker M within the image of M^{s-1}.
    const MatrixQ& P = powers[s - 1];
    MatrixQ MP = mul(M, P);
    std::vector<VectorQ> cand;
    for (const auto& z : kernel(MP, static_cast<std::size_t>(D))) cand.push_back(mat_vec(P, z));
    for (auto& nb : new_bottoms(fs, bottoms, cand, s)) bottoms.push_back(std::move(nb));
  }
  int total = 0;
  for (const auto& b : bottoms) total += b.size;
  if (total != D) throw InvariantViolation("Jordan blocks do not fill the solution space");
  std::stable_sort(bottoms.begin(), bottoms.end(), [](const Bottom& a, const Bottom& b) {
    return a.pivot != b.pivot ? a.pivot < b.pivot : a.size < b.size;
  });
  std::vector<int> heads;
  for (const auto& b : bottoms) heads.push_back(b.pivot);
  Chains ch;
  for (const auto& b : bottoms) ch.tops.push_back(chain_top(fs, b, heads));
  ch.bottoms = std::move(bottoms);
  return ch;
}

JordanProfile profile_of(const Chains& ch) {
  JordanProfile p;
  for (const auto& b : ch.bottoms) p.push_back({Rational(b.pivot), b.size});
  return p;
}

}  // namespace

IndicialData indicial(const ThetaOperator& op, const LocalPoint& point) {
  std::vector<std::string> lv = other_vars(op);
  lv.push_back("lambda");
  std::size_t lam = lv.size() - 1;
  IndicialData out;
  const int D = op.order();
  switch (point.kind) {
    case LocalPoint::Kind::Zero:
      out.polynomial = op.indicial_at_zero().with_vars(lv);
      break;
    case LocalPoint::Kind::Infinity: {
      // t = 1/s turns theta into -theta; keep the top power of t.
      int E = op.degree();
      SparsePolynomial q(lv);
      for (int d = 0; d <= D; ++d) {
        SparsePolynomial c = op.coefficient(d, E).with_vars(lv);
        if (d % 2) c = -c;
        q += c * SparsePolynomial::variable(lv, lam, d);
      }
      out.polynomial = q;
      break;
    }
    case LocalPoint::Kind::Finite: {
      std::size_t idx = op.main_index();
      auto P = op.to_d_form();
      const auto& vars = op.vars();
      SparsePolynomial shift = SparsePolynomial::variable(vars, idx) + SparsePolynomial(vars, point.c);
      std::vector<SparsePolynomial> Ps;
      int w = 0;
      bool first = true;
      for (int k = 0; k <= D; ++k) {
        Ps.push_back(P[k].substitute(idx, shift));
        if (Ps.back().is_zero()) continue;
        int v = Ps.back().min_degree_in(idx) - k;
        if (first || v < w) w = v;
        first = false;
      }
      out.ordinary = !Ps[D].is_zero() && Ps[D].min_degree_in(idx) == 0;
      SparsePolynomial q(lv);
      for (int k = 0; k <= D; ++k) {
        SparsePolynomial c(lv);
        for (const auto& [ex, v] : Ps[k].terms()) {
          if (ex[idx] != w + k) continue;
          Exponent ne;
          for (std::size_t i = 0; i < ex.size(); ++i)
            if (i != idx) ne.push_back(ex[i]);
          ne.push_back(0);
          c.add_term(ne, v);
        }
        q += c * falling(lv, lam, k);
      }
      out.polynomial = q;
      break;
    }
  }
  if (out.polynomial.is_zero()) throw DomainError("indicial polynomial vanishes identically");
  split_roots(&out);
  return out;
}

std::vector<LogSolution> frobenius_basis(const ThetaOperator& op, int T, JordanProfile* profile) {
  FrobeniusSystem fs(op);
  if (T < fs.rho_max()) throw DomainError("truncation below the largest exponent");
  Chains ch = build_chains(fs);
  const MatrixQ& M = fs.monodromy_log();
  std::vector<LogSolution> out;
  for (std::size_t c = 0; c < ch.bottoms.size(); ++c) {
    int s = ch.bottoms[c].size;
    std::vector<VectorQ> ys{ch.tops[c]};
    for (int k = 1; k < s; ++k) ys.push_back(mat_vec(M, ys.back()));
    std::reverse(ys.begin(), ys.end());
    for (int k = 0; k < s; ++k) {
      LogSolution sol = fs.solution(ys[k], T);
      sol.exponent = ch.bottoms[c].pivot;
      sol.chain = static_cast<int>(c);
      sol.position = k;
      sol.phi.resize(static_cast<std::size_t>(k + 1), SeriesQ(op.main_var(), T));
      out.push_back(std::move(sol));
    }
  }
  if (profile) *profile = profile_of(ch);
  return out;
}

JordanProfile jordan_profile(const ThetaOperator& op) {
  FrobeniusSystem fs(op);
  return profile_of(build_chains(fs));
}

std::vector<SeriesQ> apply_log(const ThetaOperator& op, const std::vector<SeriesQ>& phi) {
  if (phi.empty()) return {};
  const int D = op.order();
  std::vector<std::vector<SeriesQ>> pw{phi};  // theta^d applied, per log index
  for (int d = 1; d <= D; ++d) {
    const auto& prev = pw.back();
    std::vector<SeriesQ> next;
    for (std::size_t j = 0; j < prev.size(); ++j) {
      SeriesQ s = prev[j].theta();
      if (j + 1 < prev.size()) s = s + prev[j + 1];
      next.push_back(std::move(s));
    }
    pw.push_back(std::move(next));
  }
  int T = phi[0].order() - op.degree();
  if (T < 0) throw DomainError("series shorter than the operator degree");
  std::vector<SeriesQ> out(phi.size(), SeriesQ(phi[0].var(), T));
  for (int d = 0; d <= D; ++d)
    for (int e = 0; e <= op.degree(); ++e) {
      Rational a = op.coefficient(d, e).constant_value();
      if (a == 0) continue;
      for (std::size_t j = 0; j < phi.size(); ++j)
        for (int k = e; k <= T; ++k) out[j][k] += a * pw[d][j][k - e];
    }
  return out;
}

bool annihilates(const ThetaOperator& op, const LogSolution& s) {
  for (const auto& r : apply_log(op, s.phi))
    if (!r.is_zero()) return false;
  return true;
}

namespace {

template <typename R>
std::vector<TruncatedSeries<R>> epsilon_chain(const ThetaOperator& op, int length, int T,
                                              const std::function<R(const SparsePolynomial&)>& embed) {
  using Tr = RingTraits<R>;
  if (length < 1) throw DomainError("chain length must be positive");
  const int D = op.order(), E = op.degree();
  std::vector<Rational> q0(static_cast<std::size_t>(D + 1));
  for (int d = 0; d <= D; ++d) {
    SparsePolynomial c = op.coefficient(d, 0);
    if (!c.is_constant()) throw UnsupportedError("indicial polynomial at 0 depends on a parameter");
    q0[d] = c.constant_value();
  }
  UPolyQ Q0(q0);
  auto rr = rational_roots(Q0);
  int mu0 = 0, extra = 0;
  std::map<int, int> positive;
  for (const auto& r : rr.roots) {
    if (r.root == 0) mu0 = r.multiplicity;
    if (r.root > 0 && r.root.get_den() == 1 && r.root <= T) {
      positive[static_cast<int>(r.root.get_num().get_si())] = r.multiplicity;
      extra += r.multiplicity;
    }
  }
  if (mu0 < length) throw UnsupportedError("exponent 0 has multiplicity " + std::to_string(mu0));
  const int P = length + extra;

  std::vector<std::vector<R>> a(static_cast<std::size_t>(E + 1));
  for (int e = 1; e <= E; ++e)
    for (int d = 0; d <= D; ++d) {
      SparsePolynomial c = op.coefficient(d, e);
      a[e].push_back(c.is_zero() ? Tr::zero() : embed(c));
    }
  // Q_e(m + eps) as a polynomial in eps.
  auto shifted_q = [&](int e, int m) {
    std::vector<R> out(static_cast<std::size_t>(P), Tr::zero());
    for (int i = 0; i < std::min(P, D + 1); ++i)
      for (int d = i; d <= D; ++d) {
        if (Tr::is_zero(a[e][d])) continue;
        Rational f = binom(d, i);
        for (int k = 0; k < d - i; ++k) f *= m;
        out[i] = out[i] + Tr::scale(a[e][d], f);
      }
    return out;
  };

  std::vector<std::vector<R>> c(static_cast<std::size_t>(T + 1));
  c[0].assign(static_cast<std::size_t>(P), Tr::zero());
  c[0][0] = Tr::one();
  for (int n = 1; n <= T; ++n) {
    std::vector<R> rhs(static_cast<std::size_t>(P), Tr::zero());
    for (int e = 1; e <= std::min(E, n); ++e) {
      auto q = shifted_q(e, n - e);
      const auto& prev = c[n - e];
      for (int i = 0; i < P; ++i) {
        if (Tr::is_zero(q[i])) continue;
        for (int j = 0; i + j < P; ++j)
          if (!Tr::is_zero(prev[j])) rhs[i + j] = rhs[i + j] - q[i] * prev[j];
      }
    }
    // Q_0(n + eps) = eps^mu * u(eps).
    UPolyQ qn = Q0.taylor_shift(Rational(n));
    int mu = positive.count(n) ? positive[n] : 0;
    for (int i = 0; i < mu; ++i)
      if (!Tr::is_zero(rhs[i]))
        throw UnsupportedError("exponent " + std::to_string(n) + " entangles the chain at 0 with logarithms");
    std::vector<Rational> u(static_cast<std::size_t>(P), Rational(0));
    for (int i = 0; i < P; ++i) u[i] = qn.coeff(i + mu);
    // Inverse of u in Q[[eps]].
    std::vector<Rational> inv(static_cast<std::size_t>(P), Rational(0));
    inv[0] = 1 / u[0];
    for (int i = 1; i < P; ++i) {
      Rational s = 0;
      for (int k = 1; k <= i; ++k) s += u[k] * inv[i - k];
      inv[i] = -s * inv[0];
    }
    std::vector<R> cur(static_cast<std::size_t>(P), Tr::zero());
    for (int i = 0; i + mu < P; ++i) {
      if (Tr::is_zero(rhs[i + mu])) continue;
      for (int k = 0; i + k < P; ++k)
        if (inv[k] != 0) cur[i + k] = cur[i + k] + Tr::scale(rhs[i + mu], inv[k]);
    }
    c[n] = std::move(cur);
  }
  std::vector<TruncatedSeries<R>> out;
  for (int k = 0; k < length; ++k) {
    TruncatedSeries<R> s(op.main_var(), T);
    for (int n = 0; n <= T; ++n) s[n] = c[n][k];
    out.push_back(std::move(s));
  }
  if (length < mu0 || positive.empty() || length < 2) return out;

  // A full-length chain has a free top: make it vanish at the heads of the
  // analytic solutions at higher exponents, as frobenius_basis does.
  std::vector<std::pair<int, TruncatedSeries<R>>> heads;
  for (const auto& [m, mult] : positive) {
    if (mult != 1) throw UnsupportedError("repeated exponent " + std::to_string(m) + " beside the chain at 0");
    TruncatedSeries<R> w(op.main_var(), T);
    w[m] = Tr::one();
    for (int n = m + 1; n <= T; ++n) {
      R rhs = Tr::zero();
      for (int e = 1; e <= std::min(E, n - m); ++e) {
        R q = shifted_q(e, n - e)[0];
        if (!Tr::is_zero(q) && !Tr::is_zero(w[n - e])) rhs = rhs - q * w[n - e];
      }
      Rational q0n = Q0(Rational(n));
      if (q0n == 0) {
        if (!Tr::is_zero(rhs)) throw UnsupportedError("exponent " + std::to_string(m) + " carries a logarithm");
        continue;  // zero at the next head
      }
      w[n] = Tr::scale(rhs, 1 / q0n);
    }
    heads.emplace_back(m, std::move(w));
  }
  // Clear each head solution at the later heads' indices (they vanish below their own).
  for (std::size_t i = 0; i < heads.size(); ++i)
    for (std::size_t j = i + 1; j < heads.size(); ++j) {
      R f = heads[i].second[heads[j].first];
      if (!Tr::is_zero(f)) heads[i].second = heads[i].second - heads[j].second.times_ring(f);
    }
  TruncatedSeries<R>& top = out.back();
  for (const auto& [m, w] : heads) {
    R f = top[m];
    if (!Tr::is_zero(f)) top = top - w.times_ring(f);
  }
  return out;
}

}  // namespace

std::vector<SeriesQ> frobenius_chain(const ThetaOperator& op, int length, int T) {
  if (op.vars().size() != 1) throw DomainError("operator has parameters; use the Q[r] overload");
  return epsilon_chain<Rational>(op, length, T, [](const SparsePolynomial& p) { return p.constant_value(); });
}

std::vector<SeriesQr> frobenius_chain(const ThetaOperator& op, int length, int T, const std::string& param) {
  for (const auto& v : op.vars())
    if (v != op.main_var() && v != param) throw DomainError("operator variable '" + v + "' is not in the series ring");
  return epsilon_chain<UPolyQ>(op, length, T, [&](const SparsePolynomial& p) { return UPolyQ::from_sparse(p, param); });
}

}  // namespace hbk
