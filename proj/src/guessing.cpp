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

#include "hbk/guessing.hpp"

#include <algorithm>

#include "hbk/errors.hpp"
#include "modular.hpp"

namespace hbk {

SeriesQ apply_operator(const ThetaOperator& op, const SeriesQ& s) {
  if (op.vars().size() != 1) throw DomainError("operator coefficients involve more than the series variable");
  return op.apply(s);
}

SeriesQr apply_operator(const ThetaOperator& op, const SeriesQr& s, const std::string& param) {
  for (const auto& v : op.vars())
    if (v != op.main_var() && v != param) throw DomainError("operator variable '" + v + "' is not in the series ring");
  return op.apply<UPolyQ>(s, [&](const SparsePolynomial& c) { return UPolyQ::from_sparse(c, param); });
}

namespace {

using modp::u64;

// Ansatz cell (D, E): unknowns a_{d,e} at column d*(E+1)+e; row k is the
// coefficient of t^k, entry (k-e)^d c_{k-e}.
std::size_t rows_for(int D, int E, int V) { return static_cast<std::size_t>((D + 1) * (E + 1) + V); }

class ModularSystem {
 public:
  ModularSystem(const std::vector<Rational>& c, std::size_t nprimes) : primes_(modp::word_primes(nprimes)) {
    for (u64 p : primes_) {
      std::vector<u64> r;
      r.reserve(c.size());
      bool ok = true;
      for (const auto& x : c) {
        if (mod_u64(x.get_den(), p) == 0) {
          ok = false;
          break;
        }
        r.push_back(mod_u64(x, p));
      }
      if (ok) red_.push_back(std::move(r));
      else red_.emplace_back();
    }
  }

  std::size_t nprimes() const { return primes_.size(); }

  // Nullity of the cell modulo prime i; SIZE_MAX if the prime divides a denominator.
  std::size_t nullity(std::size_t i, int D, int E, int V) const {
    if (red_[i].empty()) return SIZE_MAX;
    u64 p = primes_[i];
    std::size_t R = rows_for(D, E, V), n = static_cast<std::size_t>((D + 1) * (E + 1));
    MatrixModP a(R, std::vector<u64>(n, 0));
    for (std::size_t k = 0; k < R; ++k)
      for (int e = 0; e <= E && static_cast<std::size_t>(e) <= k; ++e) {
        u64 c = red_[i][k - static_cast<std::size_t>(e)];
        u64 base = static_cast<u64>(k - static_cast<std::size_t>(e)) % p, pw = 1;
        for (int d = 0; d <= D; ++d) {
          a[k][static_cast<std::size_t>(d * (E + 1) + e)] = modp::mul(pw, c, p);
          pw = modp::mul(pw, base, p);
        }
      }
    return n - rank_mod_p(std::move(a), p);
  }

  // Positive nullity modulo every usable prime. Since rank mod p never exceeds
  // the rational rank, a zero here proves that no operator exists in the cell.
  bool maybe_solvable(int D, int E, int V) const {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      std::size_t z = nullity(i, D, E, V);
      if (z == 0) return false;
    }
    return true;
  }

 private:
  std::vector<u64> primes_;
  std::vector<std::vector<u64>> red_;
};

MatrixQ exact_matrix(const std::vector<Rational>& c, int D, int E, int V) {
  std::size_t R = rows_for(D, E, V), n = static_cast<std::size_t>((D + 1) * (E + 1));
  MatrixQ m(R, VectorQ(n, Rational(0)));
  for (std::size_t k = 0; k < R; ++k)
    for (int e = 0; e <= E && static_cast<std::size_t>(e) <= k; ++e) {
      const Rational& x = c[k - static_cast<std::size_t>(e)];
      Rational pw = 1;
      long base = static_cast<long>(k) - e;
      for (int d = 0; d <= D; ++d) {
        m[k][static_cast<std::size_t>(d * (E + 1) + e)] = pw * x;
        pw *= base;
      }
    }
  return m;
}

ThetaOperator vector_to_operator(const VectorQ& v, int D, int E, const std::string& var) {
  std::vector<std::string> vars{var};
  std::vector<SparsePolynomial> a;
  for (int d = 0; d <= D; ++d) {
    SparsePolynomial p(vars);
    for (int e = 0; e <= E; ++e) {
      const Rational& x = v[static_cast<std::size_t>(d * (E + 1) + e)];
      if (x != 0) p.add_term({e}, x);
    }
    a.push_back(std::move(p));
  }
  return ThetaOperator(std::move(a), var);
}

// Every row k <= T of the action is exact (it involves c_0..c_k only), so
// the check covers all supplied coefficients, not just the first T - E.
bool annihilates(const ThetaOperator& op, const std::vector<Rational>& c) {
  const int D = op.order(), E = op.degree();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(D + 1));
  for (int d = 0; d <= D; ++d)
    for (int e = 0; e <= E; ++e) {
      SparsePolynomial k = op.coefficient(d, e);
      a[static_cast<std::size_t>(d)].push_back(k.is_zero() ? Rational(0) : k.constant_value());
    }
  for (std::size_t k = 0; k < c.size(); ++k) {
    Rational acc = 0;
    for (int e = 0; e <= E && static_cast<std::size_t>(e) <= k; ++e) {
      const Rational& x = c[k - static_cast<std::size_t>(e)];
      if (x == 0) continue;
      Rational pw = 1;
      long base = static_cast<long>(k) - e;
      for (int d = 0; d <= D; ++d) {
        const Rational& v = a[static_cast<std::size_t>(d)][static_cast<std::size_t>(e)];
        if (v != 0) acc += v * pw * x;
        pw *= base;
      }
    }
    if (acc != 0) return false;
  }
  return true;
}

// Exact solve of one cell; nullopt if the nullspace is empty or the
// candidate fails the check on all supplied coefficients.
std::optional<ThetaOperator> solve_cell(const std::vector<Rational>& c, int D, int E, const GuessConfig& cfg,
                                        const std::string& var, GuessReport* rep) {
  MatrixQ m = exact_matrix(c, D, E, cfg.verify_extra);
  NullspaceStats st;
  auto basis = rational_nullspace(m, cfg.nullspace, &st);
  if (basis.empty()) return std::nullopt;
  ThetaOperator op = vector_to_operator(basis.front(), D, E, var).normal_form();
  if (op.order() != D) return std::nullopt;  // lower order in disguise; found earlier if real
  if (!annihilates(op, c)) return std::nullopt;
  if (rep) {
    rep->order = D;
    rep->degree = op.degree();
    rep->rows = m.size();
    rep->unknowns = m.front().size();
    rep->nullity = basis.size();
    rep->nullspace = st;
  }
  return op;
}

int max_degree_for(int D, std::size_t terms, const GuessConfig& cfg) {
  long usable = static_cast<long>(terms) - 2L * cfg.verify_extra;
  long e = usable / (D + 1) - 1;
  return static_cast<int>(std::min<long>(e, cfg.max_degree));
}

}  // namespace

std::optional<ThetaOperator> guess_operator(const std::vector<Rational>& coeffs, const GuessConfig& cfg,
                                            GuessReport* report, const std::string& var) {
  if (cfg.verify_extra < 1) throw DomainError("verification margin must be positive");
  if (coeffs.size() < static_cast<std::size_t>(1 + 2 * cfg.verify_extra))
    throw ResourceError("guessing needs at least " + std::to_string(1 + 2 * cfg.verify_extra) + " coefficients, got " +
                        std::to_string(coeffs.size()));
  GuessReport local;
  GuessReport* rep = report ? report : &local;
  *rep = {};
  ModularSystem sys(coeffs, 2);
  const int V = cfg.verify_extra;
  const std::size_t terms = coeffs.size();

  if (cfg.strategy == GuessConfig::Strategy::OrderFirst) {
    for (int D = 0; D <= cfg.max_order; ++D) {
      int Emax = max_degree_for(D, terms, cfg);
      if (Emax < 0) break;
      ++rep->cells_tested;
      if (!sys.maybe_solvable(D, Emax, V)) continue;
      // Smallest E with a modular solution; solvability is monotone in E.
      int lo = 0, hi = Emax;
      while (lo < hi) {
        int mid = (lo + hi) / 2;
        ++rep->cells_tested;
        if (sys.maybe_solvable(D, mid, V)) hi = mid;
        else lo = mid + 1;
      }
      for (int E = lo; E <= Emax; ++E) {
        auto op = solve_cell(coeffs, D, E, cfg, var, rep);
        if (op) return op;
      }
    }
    return std::nullopt;
  }

  for (int s = 0; s <= cfg.max_order + cfg.max_degree; ++s)
    for (int D = 0; D <= std::min(s, cfg.max_order); ++D) {
      int E = s - D;
      if (E > max_degree_for(D, terms, cfg)) continue;
      ++rep->cells_tested;
      if (!sys.maybe_solvable(D, E, V)) continue;
      auto op = solve_cell(coeffs, D, E, cfg, var, rep);
      if (op) return op;
    }
  return std::nullopt;
}

std::optional<ThetaOperator> guess_operator(CoefficientStream& stream, const GuessConfig& cfg, GuessReport* report) {
  std::size_t terms = cfg.terms ? cfg.terms : 240;
  return guess_operator(stream.take_rational(terms), cfg, report, "t");
}

bool rational_interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y, UPolyQ* num, UPolyQ* den) {
  std::size_t k = x.size();
  if (k == 0 || y.size() != k) throw DomainError("interpolation needs matching nonempty point lists");
  // Newton form.
  std::vector<Rational> dd = y;
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      if (x[i] == x[i - j]) throw DomainError("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  UPolyQ p, basis(1), modulus(1);
  for (std::size_t i = 0; i < k; ++i) {
    p += basis * UPolyQ(dd[i]);
    basis *= UPolyQ({-x[i], Rational(1)});
  }
  modulus = basis;
  // Extended Euclid on (modulus, p) until the remainder degree drops below k/2.
  UPolyQ r0 = modulus, r1 = p, t0, t1(1);
  int bound = static_cast<int>(k / 2);
  while (!r1.is_zero() && r1.degree() >= bound) {
    UPolyQ q, r;
    UPolyQ::divmod(r0, r1, &q, &r);
    UPolyQ t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.is_zero()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    Rational dv = t1(x[i]);
    if (dv == 0 || r1(x[i]) / dv != y[i]) return false;
  }
  Rational l = t1.lead();
  *num = r1 * UPolyQ(1 / l);
  *den = t1 * UPolyQ(1 / l);
  return true;
}

namespace {

std::vector<Rational> default_points(std::size_t count) {
  std::vector<Rational> pts;
  for (long n = 2; pts.size() < count; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) pts.emplace_back(n);
  }
  return pts;
}

}  // namespace

std::optional<ThetaOperator> guess_parametric(const StreamFamily& family, const ParametricConfig& cfg,
                                              ParametricReport* report) {
  ParametricReport local;
  ParametricReport* rep = report ? report : &local;
  *rep = {};
  std::vector<Rational> pts = cfg.r_points.empty() ? default_points(cfg.max_points) : cfg.r_points;
  std::size_t terms = cfg.base.terms ? cfg.base.terms : 240;
  if (pts.empty()) throw DomainError("no r points");

  // First point fixes the cell.
  int D = -1, E = -1;
  std::size_t free_col = 0;
  std::vector<Rational> used_r;
  std::vector<VectorQ> values;
  std::size_t idx = 0;
  for (; idx < pts.size() && D < 0; ++idx) {
    auto c = family(pts[idx], terms);
    auto op = guess_operator(c, cfg.base, &rep->first, "t");
    if (!op) {
      ++rep->points_discarded;
      continue;
    }
    D = rep->first.order;
    E = rep->first.degree;
  }
  if (D < 0) return std::nullopt;
  --idx;  // resample the first point through the common path

  const int V = cfg.base.verify_extra;
  std::size_t n = static_cast<std::size_t>((D + 1) * (E + 1));
  bool have_col = false;
  for (; idx < pts.size(); ++idx) {
    auto c = family(pts[idx], terms);
    auto basis = rational_nullspace(exact_matrix(c, D, E, V), cfg.base.nullspace);
    if (basis.size() != 1) {
      ++rep->points_discarded;  // degenerate point
      continue;
    }
    VectorQ v = basis.front();
    if (!have_col) {
      // Designated entry: the free column of the first nullspace.
      for (std::size_t j = n; j-- > 0;)
        if (v[j] == 1) {
          free_col = j;
          break;
        }
      have_col = true;
    }
    if (v[free_col] == 0) {
      ++rep->points_discarded;
      continue;
    }
    Rational s = 1 / v[free_col];
    for (auto& x : v) x *= s;
    used_r.push_back(pts[idx]);
    values.push_back(std::move(v));
    std::size_t k = used_r.size();
    if (k < 2 + cfg.held_out) continue;

    // Reconstruct every entry from the first k - held_out points.
    std::size_t fit = k - cfg.held_out;
    std::vector<Rational> xs(used_r.begin(), used_r.begin() + static_cast<long>(fit));
    std::vector<UPolyQ> nums(n), dens(n);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      std::vector<Rational> ys(fit);
      for (std::size_t i = 0; i < fit; ++i) ys[i] = values[i][j];
      ok = rational_interpolate(xs, ys, &nums[j], &dens[j]);
      for (std::size_t h = fit; h < k && ok; ++h) {
        Rational dv = dens[j](used_r[h]);
        ok = dv != 0 && nums[j](used_r[h]) / dv == values[h][j];
      }
    }
    if (!ok) continue;

    // Clear denominators.
    UPolyQ L(1);
    for (const auto& d : dens) {
      UPolyQ g = UPolyQ::gcd(L, d);
      UPolyQ q;
      UPolyQ::divmod(d, g, &q, nullptr);
      L *= q;
    }
    std::vector<std::string> vars{"t", "r"};
    std::vector<SparsePolynomial> a;
    int rdeg = 0;
    for (int d = 0; d <= D; ++d) {
      SparsePolynomial p(vars);
      for (int e = 0; e <= E; ++e) {
        std::size_t j = static_cast<std::size_t>(d * (E + 1) + e);
        if (nums[j].is_zero()) continue;
        UPolyQ q;
        UPolyQ::divmod(L, dens[j], &q, nullptr);
        UPolyQ poly = nums[j] * q;
        rdeg = std::max(rdeg, poly.degree());
        for (int i = 0; i <= poly.degree(); ++i)
          if (poly.coeff(i) != 0) p.add_term({e, i}, poly.coeff(i));
      }
      a.push_back(std::move(p));
    }
    rep->points_used = k;
    rep->r_degree = rdeg;
    return ThetaOperator(std::move(a), "t").normal_form();
  }
  throw UnsupportedError("parametric interpolation did not stabilize within " + std::to_string(pts.size()) + " points");
}

StreamFamily deformed_family(int N) {
  return [N](const Rational& r, std::size_t terms) {
    PotentialSpec s;
    s.N = N;
    s.deformed = true;
    s.r_value = r;
    std::vector<Rational> c;
    c.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i) c.push_back(period_fast(s, static_cast<int>(i)).coeff(0));
    return c;
  };
}

}  // namespace hbk
