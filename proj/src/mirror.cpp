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

#include "hbk/mirror.hpp"

#include "hbk/errors.hpp"
#include "hbk/localsol.hpp"

namespace hbk {

int moebius(int n) {
  if (n < 1) throw DomainError("moebius needs n >= 1");
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

namespace {

template <typename R>
TruncatedSeries<R> as_q(const TruncatedSeries<R>& s) {
  return TruncatedSeries<R>("q", s.order(), s.coeffs());
}

// Everything after the chain: q(t), t(q), Y(q), Lambert numbers.
template <typename R>
MirrorData<R> finish(std::vector<TruncatedSeries<R>> psi) {
  using Tr = RingTraits<R>;
  MirrorData<R> m;
  m.y0 = psi[0];
  m.phi1 = psi[1];
  int T = m.y0.order();
  TruncatedSeries<R> inv0 = m.y0.reciprocal();
  TruncatedSeries<R> r1 = m.phi1 * inv0;
  TruncatedSeries<R> q_of_t = r1.exp().shifted(1).truncated(T);
  m.t_of_q = as_q(q_of_t.reverse());
  if (psi.size() < 3) {
    m.phi2 = TruncatedSeries<R>(m.y0.var(), 0);
    m.yukawa = TruncatedSeries<R>("q", 0);
    return m;
  }
  m.phi2 = psi[2];
  // y2/y0 = (log q)^2/2 + psi2/psi0 - (psi1/psi0)^2/2.
  TruncatedSeries<R> g = m.phi2 * inv0 - (r1 * r1).scaled(Rational(1, 2));
  TruncatedSeries<R> gq = as_q(g.compose(m.t_of_q));
  m.yukawa = gq.theta().theta();
  m.yukawa[0] = m.yukawa[0] + Tr::one();
  m.lambert = lambert_invert(m.yukawa - TruncatedSeries<R>::constant("q", T, Tr::one()));
  return m;
}

template <typename R>
std::vector<R> lambert_impl(const TruncatedSeries<R>& s) {
  using Tr = RingTraits<R>;
  if (!Tr::is_zero(s[0])) throw DomainError("Lambert inversion needs a zero constant term");
  std::vector<R> a;
  for (int n = 1; n <= s.order(); ++n) {
    R acc = Tr::zero();
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      int mu = moebius(n / d);
      if (mu) acc = acc + Tr::scale(s[d], Rational(mu));
    }
    a.push_back(acc);
  }
  return a;
}

template <typename R>
std::vector<R> scaled_impl(const std::vector<R>& a, int p) {
  std::vector<R> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer d = 1;
    for (int k = 0; k < p; ++k) d *= static_cast<long>(i + 1);
    out.push_back(RingTraits<R>::scale(a[i], Rational(1) / Rational(d)));
  }
  return out;
}

}  // namespace

MirrorDataQ mirror_data(const ThetaOperator& op, int T) {
  if (T < 2) throw DomainError("mirror data needs T >= 2");
  JordanProfile prof;
  auto basis = frobenius_basis(op, T, &prof);
  // The longest chain headed at exponent 0.
  int best = -1, start = 0, at = 0;
  for (std::size_t c = 0; c < prof.size(); ++c) {
    if (prof[c].exponent == 0 && (best < 0 || prof[c].size > prof[static_cast<std::size_t>(best)].size)) {
      best = static_cast<int>(c);
      start = at;
    }
    at += prof[c].size;
  }
  if (best < 0 || prof[static_cast<std::size_t>(best)].size < 2)
    throw UnsupportedError("no logarithmic solution at t = 0");
  int len = std::min(3, prof[static_cast<std::size_t>(best)].size);
  std::vector<SeriesQ> psi;
  for (int k = 0; k < len; ++k) psi.push_back(basis[static_cast<std::size_t>(start + k)].phi[0]);
  return finish(std::move(psi));
}

MirrorDataQr mirror_data(const ThetaOperator& op, int T, const std::string& param) {
  if (T < 2) throw DomainError("mirror data needs T >= 2");
  // Length of the chain: multiplicity of 0, capped at 3.
  int len = 0;
  for (int d = 0; d <= op.order() && len < 3; ++d) {
    if (!op.coefficient(d, 0).is_zero()) break;
    ++len;
  }
  if (len < 2) throw UnsupportedError("no logarithmic solution at t = 0");
  return finish(frobenius_chain(op, len, T, param));
}

SeriesQ mirror_map(const ThetaOperator& op, int T) { return mirror_data(op, T).t_of_q; }
SeriesQr mirror_map(const ThetaOperator& op, int T, const std::string& param) {
  return mirror_data(op, T, param).t_of_q;
}

SeriesQ yukawa(const ThetaOperator& op, int T) {
  auto m = mirror_data(op, T);
  if (m.lambert.empty()) throw UnsupportedError("log chain at 0 is shorter than 3");
  return m.yukawa;
}
SeriesQr yukawa(const ThetaOperator& op, int T, const std::string& param) {
  auto m = mirror_data(op, T, param);
  if (m.lambert.empty()) throw UnsupportedError("log chain at 0 is shorter than 3");
  return m.yukawa;
}

std::vector<Rational> lambert_invert(const SeriesQ& s) { return lambert_impl(s); }
std::vector<UPolyQ> lambert_invert(const SeriesQr& s) { return lambert_impl(s); }

SeriesQ lambert_sum(const std::vector<Rational>& a, int T) {
  SeriesQ s("q", T);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = static_cast<int>(i) + 1;
    for (int n = d; n <= T; n += d) s[n] += a[i];
  }
  return s;
}

std::vector<Rational> scaled(const std::vector<Rational>& a, int p) { return scaled_impl(a, p); }
std::vector<UPolyQ> scaled(const std::vector<UPolyQ>& a, int p) { return scaled_impl(a, p); }

}  // namespace hbk
