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

#include "hbk/loci.hpp"

#include <algorithm>
#include <array>

#include "hbk/errors.hpp"
#include "hbk/resultant.hpp"

namespace hbk {

namespace {

using Cyc = CyclotomicNumber;

// Replace u_i^{kN} by x_i^k for the listed variables.
SparsePolynomial root_substitute(const SparsePolynomial& p, int N, const std::vector<std::size_t>& idx,
                                 const std::vector<std::string>& out_vars, const std::vector<std::size_t>& map) {
  SparsePolynomial out(out_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent ne(out_vars.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      int k = e[map[i]];
      if (std::find(idx.begin(), idx.end(), map[i]) != idx.end()) {
        if (k % N) throw InvariantViolation("exponent not divisible by N after the root-of-unity product");
        k /= N;
      }
      ne[i] = k;
    }
    out.add_term(ne, c);
  }
  return out;
}

SparsePolynomial normalized(const SparsePolynomial& p, const Exponent& unit) {
  SparsePolynomial q = p.primitive_part();
  Rational c = q.coeff(unit);
  if (c == 0) throw InvariantViolation("missing pure-power term");
  return q * (Rational(1) / c);
}

Cyc eval(const SparsePolynomial& p, const std::vector<Cyc>& pt, int N) {
  return p.evaluate_in<Cyc>(pt, [N](const Rational& c) { return Cyc(N, c); }, Cyc(N, 0));
}

int rank3(std::vector<std::vector<Cyc>> a) {
  int r = 0;
  std::size_t n = a.size(), m = a[0].size();
  for (std::size_t col = 0; col < m && r < static_cast<int>(n); ++col) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(r)]);
    Cyc inv = a[static_cast<std::size_t>(r)][col].inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][col].is_zero()) continue;
      Cyc f = a[i][col] * inv;
      for (std::size_t j = col; j < m; ++j) a[i][j] = a[i][j] - f * a[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<std::string> locus_vars(int m) {
  if (m == 2) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (int i = 0; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

SparsePolynomial delta(int N, int m) {
  if (N < 2) throw DomainError("delta needs N >= 2");
  if (m < 2) throw DomainError("delta needs m >= 2");
  // Variables u_0..u_m, s_1..s_m.
  std::vector<std::string> v;
  for (int i = 0; i <= m; ++i) v.push_back("u" + std::to_string(i));
  for (int i = 1; i <= m; ++i) v.push_back("s" + std::to_string(i));
  SparsePolynomial L = SparsePolynomial::variable(v, 0);
  for (int i = 1; i <= m; ++i)
    L += SparsePolynomial::variable(v, static_cast<std::size_t>(m + i)) *
         SparsePolynomial::variable(v, static_cast<std::size_t>(i));
  // Res_s(s^N - 1, f) = Prod_{w^N = 1} f(w).
  for (int i = 1; i <= m; ++i) {
    std::size_t s = static_cast<std::size_t>(m + i);
    SparsePolynomial g = SparsePolynomial::variable(v, s, N) - SparsePolynomial(v, 1);
    L = resultant(g, L, s);
  }
  std::vector<std::size_t> idx, map;
  for (int i = 0; i <= m; ++i) idx.push_back(static_cast<std::size_t>(i));
  map = idx;
  auto out = root_substitute(L, N, idx, locus_vars(m), map);
  Exponent unit(static_cast<std::size_t>(m + 1), 0);
  unit[0] = static_cast<int>(out.total_degree());
  return normalized(out, unit);
}

SparsePolynomial t_discriminant(int N) {
  if (N < 2) throw DomainError("needs N >= 2");
  std::vector<std::string> v{"T", "x", "y", "z"};
  auto T = SparsePolynomial::variable(v, 0), x = SparsePolynomial::variable(v, 1),
       y = SparsePolynomial::variable(v, 2), z = SparsePolynomial::variable(v, 3);
  auto one = SparsePolynomial(v, 1);
  unsigned k = static_cast<unsigned>(N - 1);
  SparsePolynomial P = x * T.pow(k) * (one + T).pow(k) + y * (one + T).pow(k) - z * T.pow(k);
  return discriminant(P, 0).with_vars(locus_vars(2));
}

CheckReport discriminant_identity(int N, bool literal) {
  SparsePolynomial d = t_discriminant(N);
  const auto& v = locus_vars(2);
  SparsePolynomial D = delta(N);
  if (!literal && N % 2) D = D.substitute(2, -SparsePolynomial::variable(v, 2));
  auto xyz = SparsePolynomial::variable(v, 0) * SparsePolynomial::variable(v, 1) * SparsePolynomial::variable(v, 2);
  Integer c = 1;
  for (int i = 0; i < 2 * (N - 1); ++i) c *= N - 1;
  if (N % 2) c = -c;
  SparsePolynomial want = xyz.pow(static_cast<unsigned>(N - 2)) * D * Rational(c);
  if (d == want) return {};
  return {false, "difference: " + (d - want).to_string()};
}

ProjectivePoint ProjectivePoint::make(std::vector<Cyc> c) {
  auto it = std::find_if(c.begin(), c.end(), [](const Cyc& a) { return !a.is_zero(); });
  if (it == c.end()) throw DomainError("zero vector is not a projective point");
  Cyc inv = it->inverse();
  for (auto& a : c) a = a * inv;
  return {std::move(c)};
}

bool ProjectivePoint::galois_real() const {
  return std::all_of(coords.begin(), coords.end(), [](const Cyc& a) { return a.conj() == a; });
}

bool ProjectivePoint::rational() const {
  return std::all_of(coords.begin(), coords.end(), [](const Cyc& a) { return a.is_rational(); });
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? " : " : "") + coords[i].to_string();
  return s + "]";
}

bool on_delta(int N, const ProjectivePoint& p) { return eval(delta(N), p.coords, N).is_zero(); }

std::vector<SingularPoint> singular_points(int N) {
  if (N < 3) throw DomainError("singular_points needs N >= 3");
  SparsePolynomial D = delta(N);
  std::vector<SparsePolynomial> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(D.derivative(i));
  std::vector<std::array<Cyc, 3>> lines;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) lines.push_back({Cyc(N, 1), Cyc::zeta(N, a), Cyc::zeta(N, b)});
  std::vector<SingularPoint> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto &p = lines[i], &q = lines[j];
      std::vector<Cyc> u{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
      std::vector<Cyc> x;
      for (const auto& c : u) x.push_back(c.pow(static_cast<unsigned>(N)));
      if (std::any_of(x.begin(), x.end(), [](const Cyc& c) { return c.is_zero(); })) continue;
      auto pt = ProjectivePoint::make(x);
      auto hit = std::find_if(out.begin(), out.end(), [&](const SingularPoint& s) { return s.point == pt; });
      if (hit != out.end()) {
        ++hit->line_pairs;
        continue;
      }
      if (!eval(D, pt.coords, N).is_zero()) throw InvariantViolation("intersection point off the locus");
      for (const auto& g : grad)
        if (!eval(g, pt.coords, N).is_zero()) throw InvariantViolation("intersection point is not singular");
      std::vector<std::vector<Cyc>> H(3);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) H[a].push_back(eval(grad[a].derivative(b), pt.coords, N));
      out.push_back({pt, rank3(H), 1});
    }
  // Deterministic order by formatted coordinates.
  std::sort(out.begin(), out.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.point.to_string() < b.point.to_string(); });
  return out;
}

std::vector<ProjectivePoint> closed_form_points(int N) {
  std::vector<ProjectivePoint> out;
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if ((i + j) % N == 0) continue;
      Cyc a = Cyc::zeta(N, i), b = Cyc::zeta(N, j), one(N, 1);
      unsigned n = static_cast<unsigned>(N);
      Cyc y = (one - a).pow(n);
      if (N % 2) y = -y;
      auto p = ProjectivePoint::make({(one - a * b).pow(n), y, (one - b).pow(n)});
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  return out;
}

SparsePolynomial group_law_divisor(int N) {
  if (N < 2) throw DomainError("group_law_divisor needs N >= 2");
  std::vector<std::string> v{"u", "y", "z", "s"};
  auto u = SparsePolynomial::variable(v, 0), y = SparsePolynomial::variable(v, 1),
       z = SparsePolynomial::variable(v, 2), s = SparsePolynomial::variable(v, 3);
  SparsePolynomial R = resultant(s.pow(static_cast<unsigned>(N)) - y, z - (u + s).pow(static_cast<unsigned>(N)), 3);
  auto out = root_substitute(R, N, {0}, locus_vars(2), {0, 1, 2});
  return normalized(out, {0, 0, N});
}

CheckReport group_law_relation(int N) {
  SparsePolynomial D = group_law_divisor(N), d = delta(N);
  const auto& v = locus_vars(2);
  SparsePolynomial z = SparsePolynomial::variable(v, 2);
  SparsePolynomial rhs = d.substitute(2, N % 2 ? -z : z);
  if (N % 2) rhs = -rhs;
  if (D == rhs) return {};
  return {false, "difference: " + (D - rhs).to_string()};
}

CheckReport degeneration_check(int N, int m) {
  if (m < 3) throw DomainError("degeneration needs m >= 3");
  SparsePolynomial hi = delta(N, m).substitute(static_cast<std::size_t>(m), Rational(0));
  SparsePolynomial lo = delta(N, m - 1).pow(static_cast<unsigned>(N));
  std::vector<std::string> lv = locus_vars(m - 1), hv = locus_vars(m);
  SparsePolynomial lo_h(hv);
  for (const auto& [e, c] : lo.terms()) {
    Exponent ne = e;
    ne.push_back(0);
    lo_h.add_term(ne, c);
  }
  if (hi == lo_h) return {};
  return {false, "Delta(N, m) at x_m = 0 is not Delta(N, m-1)^N"};
}

UPolyQ diagonal_delta(int N) {
  SparsePolynomial d = delta(N);
  SparsePolynomial p(std::vector<std::string>{"t"});
  for (const auto& [e, c] : d.terms()) {
    Rational k = c;
    if (N % 2 && e[2] % 2) k = -k;
    p.add_term({e[0] + e[1]}, k);
  }
  return UPolyQ::from_sparse(p, "t");
}

}  // namespace hbk
