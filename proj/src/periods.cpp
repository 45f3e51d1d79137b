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

#include "hbk/periods.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unistd.h>

#include "hbk/errors.hpp"
#include "hbk/json_io.hpp"
#include "hbk/version.hpp"

namespace hbk {

void PotentialSpec::validate() const {
  if (N < 2) throw DomainError("potential needs N >= 2");
  if (m < 2) throw DomainError("potential needs m >= 2");
  if (deformed && m != 2) throw DomainError("the deformed potential is defined for m = 2 only");
  if (r_value && !deformed) throw DomainError("r value given for an undeformed potential");
  if (!weights.empty() && static_cast<int>(weights.size()) != m) throw DomainError("weight count must equal m");
}

std::string PotentialSpec::key() const {
  return "N" + std::to_string(N) + "m" + std::to_string(m) + (deformed ? "r" : "");
}

SeriesQ phi_series(int N, int T) {
  if (N < 1) throw DomainError("phi_series needs N >= 1");
  SeriesQ s("x", T);
  Integer f = 1;
  for (int i = 0; i <= T; ++i) {
    if (i > 0) f *= i;
    s[i] = Rational(1) / Rational(ipow(f, static_cast<unsigned long>(N)));
  }
  return s;
}

SeriesQ dwork_series(int N, int T) {
  if (N < 1) throw DomainError("dwork_series needs N >= 1");
  SeriesQ s("t", T);
  for (int m = 0; m <= T; ++m) s[m] = Rational(factorial(static_cast<long>(N) * m) / ipow(factorial(m), static_cast<unsigned long>(N)));
  return s;
}

namespace {

std::vector<std::string> torus_names(const PotentialSpec& s) {
  std::vector<std::string> v;
  if (s.m == 2) {
    for (int i = 1; i < s.N; ++i) v.push_back("Y" + std::to_string(i));
  } else {
    for (int l = 1; l < s.m; ++l)
      for (int j = 1; j < s.N; ++j) v.push_back("Y" + std::to_string(j) + "_" + std::to_string(l));
  }
  return v;
}

}  // namespace

SparsePolynomial build_potential(const PotentialSpec& spec) {
  spec.validate();
  auto vars = torus_names(spec);
  std::size_t nt = vars.size();
  if (spec.m == 2) {
    if (spec.deformed && !spec.r_value) vars.push_back("r");
    SparsePolynomial a(vars, 1), b(vars, 1);
    for (std::size_t i = 0; i < nt; ++i) {
      a *= SparsePolynomial(vars, 1) + SparsePolynomial::variable(vars, i, 1);
      b *= SparsePolynomial(vars, 1) + SparsePolynomial::variable(vars, i, -1);
    }
    if (spec.deformed) a *= spec.r_value ? SparsePolynomial(vars, *spec.r_value) : SparsePolynomial::variable(vars, nt);
    return a + b;
  }
  // m-fold: prod_j (1 + sum_l Y_j^(l)) * (p_1 + sum_l p_{l+1} / prod_j Y_j^(l)).
  // p_{l+1} stands for the monomial prod_j x_{l+1} of the parameters.
  bool symbolic = spec.weights.empty();
  if (symbolic)
    for (int l = 1; l <= spec.m; ++l) vars.push_back("p" + std::to_string(l));
  int n1 = spec.N - 1;
  auto torus = [&](int j, int l) { return static_cast<std::size_t>((l - 1) * n1 + (j - 1)); };
  auto param = [&](int l) {
    return symbolic ? SparsePolynomial::variable(vars, nt + static_cast<std::size_t>(l - 1))
                    : SparsePolynomial(vars, spec.weights[static_cast<std::size_t>(l - 1)]);
  };
  SparsePolynomial first(vars, 1);
  for (int j = 1; j <= n1; ++j) {
    SparsePolynomial f(vars, 1);
    for (int l = 1; l < spec.m; ++l) f += SparsePolynomial::variable(vars, torus(j, l));
    first *= f;
  }
  SparsePolynomial second = param(1);
  for (int l = 1; l < spec.m; ++l) {
    Exponent e(vars.size(), 0);
    for (int j = 1; j <= n1; ++j) e[torus(j, l)] = -1;
    second += param(l + 1) * SparsePolynomial::monomial(vars, e, 1);
  }
  return first * second;
}

Integer kernel_coefficient(int N, const std::vector<long>& j) {
  return ipow(multinomial(j), static_cast<unsigned long>(N));
}

namespace {

// Torus exponent -> coefficient polynomial in r.
using LaurentMap = std::map<Exponent, UPolyQ>;

LaurentMap to_laurent(const PotentialSpec& spec) {
  SparsePolynomial v = build_potential(spec);
  if (spec.m != 2 && spec.weights.empty()) {
    // Default weights 1.
    PotentialSpec s = spec;
    s.weights.assign(static_cast<std::size_t>(spec.m), Rational(1));
    v = build_potential(s);
  }
  std::size_t nt = torus_names(spec).size();
  bool has_r = v.nvars() > nt;
  LaurentMap out;
  for (const auto& [e, c] : v.terms()) {
    Exponent te(e.begin(), e.begin() + static_cast<long>(nt));
    UPolyQ coef = has_r ? UPolyQ(c) * UPolyQ::x(e[nt]) : UPolyQ(c);
    auto [it, ins] = out.try_emplace(te, coef);
    if (!ins) it->second += coef;
  }
  return out;
}

LaurentMap multiply(const LaurentMap& a, const LaurentMap& b, std::size_t guard) {
  LaurentMap out;
  Exponent e;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto [it, ins] = out.try_emplace(e, ca * cb);
      if (!ins) it->second += ca * cb;
      if (out.size() > guard)
        throw ResourceError("Laurent power support exceeds the guard of " + std::to_string(guard) + " terms");
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UPolyQ pair_constant_term(const LaurentMap& a, const LaurentMap& b) {
  UPolyQ acc;
  Exponent neg;
  for (const auto& [e, c] : a) {
    neg = e;
    for (auto& x : neg) x = -x;
    auto it = b.find(neg);
    if (it != b.end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace

struct CoefficientStream::Laurent {
  LaurentMap terms;
};

UPolyQ period_constant_term(const PotentialSpec& spec, int i, const OracleOptions& opt) {
  if (i < 0) throw DomainError("negative power");
  LaurentMap v = to_laurent(spec);
  LaurentMap one{{Exponent(v.begin()->first.size(), 0), UPolyQ(1)}};
  int a = (i + 1) / 2, b = i / 2;
  LaurentMap pb = one;
  for (int k = 0; k < b; ++k) pb = multiply(pb, v, opt.max_support);
  LaurentMap pa = a == b ? pb : multiply(pb, v, opt.max_support);
  return pair_constant_term(pa, pb);
}

UPolyQ period_fast(const PotentialSpec& spec, int i) {
  spec.validate();
  if (i < 0) throw DomainError("negative power");
  const unsigned long N = static_cast<unsigned long>(spec.N);
  if (spec.m == 2) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(i) + 1);
    Integer binom = 1;
    for (int j = 0; j <= i; ++j) {
      if (j > 0) {
        binom *= i - j + 1;
        binom /= j;
      }
      coeffs[static_cast<std::size_t>(j)] = Rational(ipow(binom, N));
    }
    if (!spec.deformed) {
      Rational s = 0;
      for (const auto& c : coeffs) s += c;
      return UPolyQ(s);
    }
    UPolyQ p(coeffs);
    if (spec.r_value) return UPolyQ(p(*spec.r_value));
    return p;
  }
  // Multinomial sum over compositions of i into m parts.
  std::vector<Rational> w = spec.weights;
  if (w.empty()) w.assign(static_cast<std::size_t>(spec.m), Rational(1));
  std::vector<long> parts(static_cast<std::size_t>(spec.m), 0);
  Rational total = 0;
  // Enumerate compositions recursively.
  auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos + 1 == parts.size()) {
      parts[pos] = left;
      Rational term = Rational(kernel_coefficient(spec.N, parts));
      for (std::size_t k = 0; k < parts.size(); ++k) term *= rpow(w[k], parts[k]);
      total += term;
      return;
    }
    for (long j = 0; j <= left; ++j) {
      parts[pos] = j;
      self(self, pos + 1, left - j);
    }
  };
  rec(rec, 0, i);
  return UPolyQ(total);
}

CheckReport product_identity_check(int N, int B) {
  CheckReport rep;
  if (N < 1 || B < 0) throw DomainError("product_identity_check needs N >= 1 and B >= 0");
  const unsigned long n = static_cast<unsigned long>(N);
  for (int s = 0; s <= B && rep.pass; ++s)
    for (int k = 0; k <= s; ++k) {
      int j = s - k;
      Rational lhs(ipow(binomial(s, k), n), ipow(factorial(s), n));
      lhs.canonicalize();
      Rational rhs(1, ipow(factorial(j) * factorial(k), n));
      rhs.canonicalize();
      if (lhs != rhs) {
        rep.pass = false;
        rep.detail = "bidegree (" + std::to_string(j) + "," + std::to_string(k) + ")";
        break;
      }
    }
  // Diagonal x = y: Phi_N(x)^2 coefficients; for N = 2 these are C(2n,n)/(n!)^2.
  if (rep.pass) {
    SeriesQ phi = phi_series(N, B);
    SeriesQ sq = phi * phi;
    for (int s = 0; s <= B; ++s) {
      Rational diag = 0;
      for (int k = 0; k <= s; ++k) {
        Rational t(ipow(binomial(s, k), n), ipow(factorial(s), n));
        t.canonicalize();
        diag += t;
      }
      if (diag != sq[s]) {
        rep.pass = false;
        rep.detail = "diagonal coefficient " + std::to_string(s);
        break;
      }
      Rational clausen(binomial(2 * s, s), factorial(s) * factorial(s));
      clausen.canonicalize();
      if (N == 2 && sq[s] != clausen) {
        rep.pass = false;
        rep.detail = "Clausen coefficient " + std::to_string(s);
        break;
      }
    }
  }
  return rep;
}

CoefficientStream::CoefficientStream(PotentialSpec spec, Provenance prov, OracleOptions opt)
    : spec_(std::move(spec)), prov_(prov), opt_(opt) {
  spec_.validate();
}

std::string CoefficientStream::provenance_tag() const {
  return prov_ == Provenance::ConstantTermOracle ? "constant-term oracle" : "binomial closed form";
}

void CoefficientStream::extend_oracle(std::size_t n) {
  if (powers_.empty()) {
    auto v = to_laurent(spec_);
    auto p0 = std::make_shared<Laurent>();
    p0->terms.emplace(Exponent(v.begin()->first.size(), 0), UPolyQ(1));
    powers_.push_back(p0);
  }
  LaurentMap v;
  for (std::size_t i = c_.size(); i < n; ++i) {
    std::size_t a = (i + 1) / 2, b = i / 2;
    while (powers_.size() <= a) {
      if (v.empty()) v = to_laurent(spec_);
      auto next = std::make_shared<Laurent>();
      next->terms = multiply(powers_.back()->terms, v, opt_.max_support);
      ++products_;
      powers_.push_back(next);
    }
    c_.push_back(pair_constant_term(powers_[a]->terms, powers_[b]->terms));
    ++computed_;
  }
}

const std::vector<UPolyQ>& CoefficientStream::take(std::size_t n) {
  if (c_.size() >= n) return c_;
  if (prov_ == Provenance::ConstantTermOracle) {
    extend_oracle(n);
    return c_;
  }
  bool cacheable = !cache_dir_.empty() && !spec_.r_value && spec_.weights.empty();
  if (cacheable && c_.empty()) {
    std::vector<UPolyQ> loaded;
    std::size_t got = cache_load(cache_dir_, spec_, &loaded);
    if (got > 0) {
      cache_hits_ += std::min(got, n);
      if (got > n) loaded.resize(n);
      c_ = std::move(loaded);
    }
  }
  std::size_t before = c_.size();
  for (std::size_t i = c_.size(); i < n; ++i) {
    c_.push_back(period_fast(spec_, static_cast<int>(i)));
    ++computed_;
  }
  if (cacheable && c_.size() > before) cache_store(cache_dir_, spec_, c_);
  return c_;
}

std::vector<Rational> CoefficientStream::take_rational(std::size_t n) {
  const auto& c = take(n);
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].degree() > 0) throw DomainError("coefficient depends on r");
    out.push_back(c[i].coeff(0));
  }
  return out;
}

namespace {

std::filesystem::path cache_file(const std::string& dir, const PotentialSpec& spec) {
  return std::filesystem::path(dir) / "periods" / spec.key() / "coeffs.json";
}

}  // namespace

std::size_t cache_load(const std::string& dir, const PotentialSpec& spec, std::vector<UPolyQ>* out) {
  auto path = cache_file(dir, spec);
  std::ifstream in(path);
  if (!in) return 0;
  try {
    io::json j = io::json::parse(in);
    if (j.value("version", std::string()) != HBK_VERSION_STRING) return 0;
    if (j.value("key", std::string()) != spec.key()) return 0;
    std::vector<UPolyQ> c;
    for (const auto& v : j.at("coeffs")) c.push_back(io::upoly_from_json(v, "r"));
    if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1) return 0;
    *out = std::move(c);
    return out->size();
  } catch (const std::exception&) {
    return 0;  // unreadable cache entries are ignored
  }
}

void cache_store(const std::string& dir, const PotentialSpec& spec, const std::vector<UPolyQ>& coeffs) {
  if (coeffs.empty()) return;
  auto path = cache_file(dir, spec);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw ResourceError("cannot create cache directory " + path.parent_path().string());
  SeriesQr s("t", static_cast<int>(coeffs.size()) - 1, coeffs);
  io::json j = io::series_json(s, "r");
  j["key"] = spec.key();
  j["version"] = HBK_VERSION_STRING;
  static std::atomic<unsigned> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write cache file " + tmp.string());
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ResourceError("cannot publish cache file " + path.string());
  }
}

}  // namespace hbk
