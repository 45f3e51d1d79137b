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

#include "hbk/linalg.hpp"

#include <algorithm>

#include "hbk/errors.hpp"
#include "modular.hpp"

namespace hbk {

namespace {

std::size_t ncols(const MatrixQ& m) { return m.empty() ? 0 : m.front().size(); }

std::vector<VectorQ> basis_from_rref(const MatrixQ& r, const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<VectorQ> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<VectorQ> nullspace_exact(MatrixQ a, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return basis_from_rref(a, pivots, n);
}

bool certify(const MatrixQ& m, const std::vector<VectorQ>& basis) {
  for (const auto& v : basis) {
    // Scale to an integer vector first; integer dot products are cheaper.
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Integer> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j].get_num() * (l / v[j].get_den());
    for (const auto& row : m) {
      Rational acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (w[j] != 0 && row[j] != 0) acc += row[j] * w[j];
      if (acc != 0) return false;
    }
  }
  return true;
}

std::vector<VectorQ> nullspace_modular(const MatrixQ& m, std::size_t n, std::size_t max_primes, NullspaceStats* stats) {
  std::vector<std::size_t> best_pivots, free_cols;
  bool have = false;
  // residues[i][k]: rref row i at free column free_cols[k]; only these enter the basis.
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  std::size_t used = 0, tried = 0;
  Rational last_probe;
  bool probe_ok = false;
  while (used < max_primes && tried < 4 * max_primes) {
    std::uint64_t p = modp::word_primes(tried + 1)[tried];
    ++tried;
    MatrixModP a(m.size(), std::vector<std::uint64_t>(n));
    bool bad = false;
    for (std::size_t i = 0; i < m.size() && !bad; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] == 0) continue;
        if (mod_u64(m[i][j].get_den(), p) == 0) {
          bad = true;
          break;
        }
        a[i][j] = mod_u64(m[i][j], p);
      }
    if (bad) continue;
    auto piv = rref_mod_p(a, p);
    bool better = !have || piv.size() > best_pivots.size() ||
                  (piv.size() == best_pivots.size() && piv < best_pivots);
    if (better) {
      best_pivots = piv;
      have = true;
      modulus = 1;
      used = 0;
      probe_ok = false;
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      free_cols.clear();
      for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f]) free_cols.push_back(f);
      residues.assign(piv.size(), std::vector<Integer>(free_cols.size(), Integer(0)));
    } else if (piv != best_pivots) {
      continue;  // unlucky prime
    }
    if (free_cols.empty()) {
      if (stats) stats->modular = true;
      return {};
    }
    Integer pz = static_cast<unsigned long>(p);
    std::uint64_t minv = modp::inv(mod_u64(modulus, p), p);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t k = 0; k < free_cols.size(); ++k) {
        Integer& x = residues[i][k];
        std::uint64_t diff = modp::sub(a[i][free_cols[k]], mod_u64(x, p), p);
        if (diff != 0) x += modulus * Integer(static_cast<unsigned long>(modp::mul(diff, minv, p)));
      }
    modulus *= pz;
    ++used;
    // Cheap gate: a probe entry must reconstruct to the same value twice in a row.
    if (!piv.empty()) {
      Rational probe;
      bool ok = rational_reconstruct(residues.back().back(), modulus, &probe);
      bool stable = ok && probe_ok && probe == last_probe;
      probe_ok = ok;
      if (ok) last_probe = probe;
      if (!stable) continue;
    }
    MatrixQ r(piv.size(), VectorQ(n));
    bool ok = true;
    for (std::size_t i = 0; i < piv.size() && ok; ++i)
      for (std::size_t k = 0; k < free_cols.size() && ok; ++k)
        ok = rational_reconstruct(residues[i][k], modulus, &r[i][free_cols[k]]);
    if (!ok) continue;
    auto basis = basis_from_rref(r, piv, n);
    if (certify(m, basis)) {
      if (stats) {
        stats->modular = true;
        stats->primes_used = used;
      }
      return basis;
    }
  }
  throw ResourceError("modular nullspace did not certify within the prime budget");
}

}  // namespace

std::vector<std::size_t> rref_mod_p(MatrixModP& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t n = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    std::uint64_t inv = modp::inv(a[row][col], p);
    auto& pr = a[row];
    for (std::size_t j = col; j < n; ++j) pr[j] = modp::mul(pr[j], inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      std::uint64_t f = a[i][col];
      auto& ai = a[i];
      for (std::size_t j = col; j < n; ++j)
        if (pr[j]) ai[j] = modp::sub(ai[j], modp::mul(f, pr[j], p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_mod_p(MatrixModP a, std::uint64_t p) { return rref_mod_p(a, p).size(); }

bool rational_reconstruct(const Integer& a, const Integer& m, Rational* out) {
  Integer bound;
  mpz_fdiv_q_ui(bound.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (gcd(r1, t1) != 1) return false;
  Rational q(r1, t1);
  q.canonicalize();
  *out = q;
  return true;
}

std::vector<VectorQ> rational_nullspace(const MatrixQ& m, const NullspaceOptions& opt, NullspaceStats* stats) {
  std::size_t n = ncols(m);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("ragged matrix");
  if (stats) *stats = {};
  if (m.empty()) {
    std::vector<VectorQ> basis;
    return basis;
  }
  bool modular = opt.mode == NullspaceOptions::Mode::Modular ||
                 (opt.mode == NullspaceOptions::Mode::Auto && (m.size() > opt.modular_threshold || n > opt.modular_threshold));
  if (modular) return nullspace_modular(m, n, opt.max_primes, stats);
  return nullspace_exact(m, n);
}

}  // namespace hbk
