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

#include "hbk/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>

#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/guessing.hpp"
#include "hbk/kernelexp.hpp"
#include "hbk/localsol.hpp"
#include "hbk/loci.hpp"
#include "hbk/mirror.hpp"
#include "hbk/plot.hpp"

namespace hbk {

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kR{"r"};
const std::vector<std::string> kYZ{"y", "z"};

// Collects failures for one criterion.
struct Ledger {
  std::string detail;
  bool ok = true;
  void fail(const std::string& s) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
  void check(bool cond, const std::string& s) {
    if (!cond) fail(s);
  }
};

std::string str(int n) { return std::to_string(n); }

std::size_t diagonal_terms(int N) { return N <= 6 ? 120 : N == 7 ? 160 : N == 8 ? 240 : 500; }

std::vector<Rational> diagonal_stream(int N, std::size_t n) {
  PotentialSpec s;
  s.N = N;
  CoefficientStream st(s, CoefficientStream::Provenance::BinomialClosedForm);
  return st.take_rational(n);
}

const ThetaOperator& diagonal_op(int N) {
  static std::mutex mu;
  static std::map<int, ThetaOperator> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  GuessConfig cfg;
  cfg.max_order = std::max(cfg.max_order, 2 * N);
  auto op = guess_operator(diagonal_stream(N, diagonal_terms(N)), cfg);
  if (!op) throw UnsupportedError("no operator found for N = " + str(N));
  return cache.emplace(N, *op).first->second;
}

const ThetaOperator& deformed_op() {
  static const ThetaOperator op = [] {
    ParametricConfig cfg;
    cfg.base.terms = 120;
    auto o = guess_parametric(deformed_family(4), cfg);
    if (!o) throw UnsupportedError("no parametric operator for the deformed family");
    return *o;
  }();
  return op;
}

ThetaOperator fixture_diagonal(int N) {
  const auto& fx = fixtures::load("diagonal_operators.json");
  return fixtures::theta_operator(fx["operators"][str(N)], kT, "t");
}

UPolyQ rpoly(const fixtures::json& j) { return UPolyQ::from_sparse(fixtures::poly(j, kR), "r"); }

UPolyQ radical_off_zero(const UPolyQ& p) {
  UPolyQ r = p.squarefree_part(), q, rem;
  UPolyQ::divmod(r, UPolyQ::x(), &q, &rem);
  return rem.is_zero() ? q.monic() : r;
}

Integer ipow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// 1. Diagonal operators for N = 2..6 against the fixture list.
void c1(Ledger& L) {
  for (int N = 2; N <= 6; ++N)
    L.check(diagonal_op(N).equal_up_to_sign(fixture_diagonal(N).normal_form()), "N=" + str(N) + " differs");
}

// 2. Minimal orders.
void c2(Ledger& L, bool n9) {
  const auto& fx = fixtures::load("order_table.json")["orders"];
  for (int N = 2; N <= (n9 ? 9 : 8); ++N) {
    int want = fx[str(N)].get<int>();
    int got = diagonal_op(N).order();
    L.check(got == want, "N=" + str(N) + ": order " + str(got) + " vs " + str(want));
  }
}

// 3. Jordan profiles at 0.
void c3(Ledger& L) {
  for (int N = 2; N <= 5; ++N)
    L.check(jordan_profile(diagonal_op(N)) == JordanProfile{{0, N - 1}}, "N=" + str(N) + " is not MUM");
  const auto& fx = fixtures::load("monodromy.json")["profiles"];
  for (int N : {6, 7}) {
    JordanProfile want;
    for (const auto& b : fx[str(N)]) want.push_back({Rational(b[0].get<int>()), b[1].get<int>()});
    L.check(jordan_profile(diagonal_op(N)) == want, "N=" + str(N) + " profile differs");
  }
}

// 4. Mirror maps through q^10.
void c4(Ledger& L) {
  const auto& fx = fixtures::load("mirror_maps.json")["maps"];
  for (int N = 3; N <= 7; ++N) {
    auto m = mirror_data(diagonal_op(N), 10);
    for (int k = 1; k <= 10; ++k)
      if (m.t_of_q[k] != parse_rational(fx[str(N)][k - 1].get<std::string>())) {
        L.fail("N=" + str(N) + " q^" + str(k) + ": " + m.t_of_q[k].get_str());
        break;
      }
  }
}

// 5. Deformed family.
void c5(Ledger& L) {
  const auto& fx = fixtures::load("deformed_family.json");
  const auto& op = deformed_op();
  L.check(op.order() == 4, "order " + str(op.order()));
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  for (int i = 0; i < 5; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    SeriesQ s("t", 59, deformed_family(4)(r, 60));
    L.check(apply_operator(op.substitute("r", r), s).is_zero(), "specialization at r=" + r.get_str() + " fails");
  }
  auto m = mirror_data(op, 7, "r");
  for (int k = 1; k <= 2; ++k)
    L.check(m.phi1[k] == rpoly(fx["phi1"][static_cast<std::size_t>(k)]), "phi1[" + str(k) + "] differs");
  for (int k = 0; k <= 6; ++k)
    L.check(m.t_of_q[k] == rpoly(fx["mirror_map"][static_cast<std::size_t>(k)]), "t(q) at q^" + str(k) + " differs");
  for (int d = 1; d <= 7; ++d)
    L.check(m.lambert[static_cast<std::size_t>(d - 1)] == rpoly(fx["lambert"][static_cast<std::size_t>(d - 1)]),
            "a_" + str(d) + " = " + m.lambert[static_cast<std::size_t>(d - 1)].to_string("r") + " vs fixture");
  UPolyQ sq = UPolyQ{Rational(-1), Rational(1)}.pow(2);
  for (int d = 2; d <= 7; ++d) {
    UPolyQ q, rem;
    UPolyQ::divmod(m.lambert[static_cast<std::size_t>(d - 1)], sq, &q, &rem);
    L.check(rem.is_zero(), "(r-1)^2 does not divide a_" + str(d));
  }
  auto op1 = guess_operator(deformed_family(4)(Rational(1), 80), GuessConfig{});
  L.check(op1 && op1->equal_up_to_sign(fixture_diagonal(4).normal_form()), "r=1 does not give the N=4 operator");
  auto m0 = mirror_data(op.substitute("r", Rational(0)), 9);
  for (int k = 0; k <= 9; ++k) {
    // Catalan numbers with alternating sign, from the closed form.
    Rational want = k == 0 ? Rational(0) : Rational(binomial(2 * k, k)) / Rational(k + 1);
    if (k % 2 == 0) want = -want;
    L.check(m0.t_of_q[k] == want, "r=0 t(q) at q^" + str(k) + " is not Catalan");
  }
}

// 6. Kernel expansion.
void c6(Ledger& L) {
  auto t2 = kernel_expansion(2, 8);
  for (int m = 0; m <= 8; ++m) {
    UPolyQ p = dehomogenize(t2[static_cast<std::size_t>(m)].P);
    for (int j = 0; j <= m; ++j) L.check(p.coeff(j) == Rational(ipow(binomial(m, j), 2)), "N=2 triangle at m=" + str(m));
  }
  const auto& kt = fixtures::load("kernel_tables.json");
  auto t3 = kernel_expansion(3, 5);
  for (int m = 1; m <= 5; ++m)
    L.check(t3[static_cast<std::size_t>(m)].P == fixtures::poly(kt["table1"]["3"][static_cast<std::size_t>(m - 1)], kYZ),
            "N=3 P_" + str(m) + " differs from Table 1");
  const auto& t2f = kt["table2"];
  auto rows = t2f["rows"].get<std::vector<int>>();
  for (int N : {2, 3, 4}) {
    int shift = N == 2 ? 0 : 1;
    auto terms = kernel_expansion(N, rows.back());
    const auto& col = t2f[str(N)];
    for (std::size_t i = 0; i < col.size(); ++i) {
      std::vector<Integer> want;
      for (const auto& x : col[i]) want.emplace_back(x.get<long>());
      L.check(gamma_vector(terms[static_cast<std::size_t>(rows[i] - shift)]) == want,
              "Table 2 N=" + str(N) + " row " + str(rows[i]));
    }
  }
  for (int N = 2; N <= 5; ++N)
    for (const auto& k : kernel_diagnostics(N, 12)) {
      std::string at = "N=" + str(N) + " m=" + str(k.m);
      L.check(k.integral && k.palindromic && k.homogeneous, at + " structure");
      if (k.m <= 10) L.check(k.row_sum_ok, at + " row sum");
    }
}

// 7. Conjectures.
void c7(Ledger& L) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& k : kernel_diagnostics(N, 12)) {
      if (k.m >= 1) L.check(k.gamma_positive, "gamma not positive at N=" + str(N) + " m=" + str(k.m));
      if (k.m <= 10) L.check(k.real_rooted, "not real-rooted at N=" + str(N) + " m=" + str(k.m));
    }
}

// 8. Loci.
void c8(Ledger& L) {
  std::vector<std::string> xyz{"x", "y", "z"};
  const auto& pf = fixtures::load("pf3.json");
  L.check(delta(2) == fixtures::poly(pf["operators"]["2"][1], xyz), "Delta_2 is not the Kallen polynomial");
  // Derived oracle: Delta_3(u^3, v^3, w^3) = Prod (u + a v + b w) collapses to this.
  auto x = SparsePolynomial::variable(xyz, 0), y = SparsePolynomial::variable(xyz, 1),
       z = SparsePolynomial::variable(xyz, 2);
  L.check(delta(3) == (x + y + z).pow(3) - x * y * z * Rational(27), "Delta_3 differs");
  L.check(delta(4) == fixtures::poly(fixtures::load("loci.json")["delta4"], xyz), "Delta_4 differs");
  for (int N = 2; N <= 5; ++N) {
    auto r = discriminant_identity(N, true);
    if (!r.pass)
      L.fail("discriminant identity N=" + str(N) + " (holds with z -> (-1)^N z: " +
             (discriminant_identity(N).pass ? "yes" : "no") + ")");
  }
  for (int N = 3; N <= 6; ++N) {
    auto pts = singular_points(N);
    L.check(static_cast<int>(pts.size()) == (N - 1) * (N - 2) / 2, "N=" + str(N) + ": " + str(int(pts.size())) + " points");
    for (const auto& p : pts) L.check(p.point.galois_real(), "N=" + str(N) + " point not Galois-real");
  }
  for (int N = 2; N <= 5; ++N) L.check(group_law_relation(N).pass, "group-law relation N=" + str(N));
  for (int N = 2; N <= 4; ++N) {
    UPolyQ lead = UPolyQ::from_sparse(diagonal_op(N).coeff(diagonal_op(N).order()), "t");
    L.check(diagonal_delta(N).squarefree_part() == radical_off_zero(lead), "diagonal radical N=" + str(N));
  }
  // N = 5: the leading coefficient minus its apparent part divides the diagonal.
  UPolyQ lead = radical_off_zero(UPolyQ::from_sparse(diagonal_op(5).coeff(diagonal_op(5).order()), "t"));
  UPolyQ g = UPolyQ::gcd(lead, diagonal_delta(5)), rest, rem;
  UPolyQ::divmod(lead, g, &rest, &rem);
  bool apparent = true;
  for (const auto& rt : rational_roots(rest).roots) {
    auto ind = indicial(diagonal_op(5), LocalPoint::at(rt.root));
    for (const auto& e : ind.roots) apparent = apparent && e.multiplicity == 1 && e.root.get_den() == 1 && e.root >= 0;
    apparent = apparent && ind.leftover_degree() == 0;
  }
  L.check(rest.degree() >= 0 && apparent && rational_roots(rest).leftover.degree() <= 0,
          "N=5 singular factor does not divide Delta_5(t,t,-1)");
}

// 9. Three-variable operators, closed forms, exponents at infinity.
void c9(Ledger& L) {
  const auto& pf = fixtures::load("pf3.json");
  std::vector<std::string> xyz = pf["vars"].get<std::vector<std::string>>();
  for (const auto& [key, ops] : pf["operators"].items()) {
    auto r = verify_pf3(std::stoi(key), fixtures::polys(ops, xyz), pf["orders_checked"][key].get<int>());
    L.check(r.pass, "N=" + key + ": " + r.detail);
  }
  auto r2 = closed_form_check(2, 12), r3 = closed_form_check(3, 10);
  L.check(r2.pass, "N=2 closed form: " + r2.detail);
  L.check(r3.pass, "N=3 closed form: " + r3.detail);
  auto op = ThetaOperator::from_d_form(fixtures::polys(pf["operators"]["4"], xyz), "x");
  std::vector<Rational> want;
  for (const auto& e : pf["riemann_infinity_4"]) want.push_back(parse_rational(e.get<std::string>()));
  auto got = indicial(op, LocalPoint::infinity()).exponents();
  if (got != want) {
    std::string s;
    for (const auto& e : got) s += (s.empty() ? "" : ",") + e.get_str();
    L.fail("exponents at infinity {" + s + "} vs fixture scheme");
  }
}

// 10. Oracle equivalence.
void c10(Ledger& L) {
  for (int N = 2; N <= 5; ++N) {
    PotentialSpec s;
    s.N = N;
    for (int i = 0; i <= 12; ++i) L.check(period_fast(s, i) == period_constant_term(s, i), "N=" + str(N) + " i=" + str(i));
  }
  for (int N = 2; N <= 5; ++N)
    for (int m = 3; (N - 1) * (m - 1) <= 4; ++m) {
      PotentialSpec s;
      s.N = N;
      s.m = m;
      for (int i = 0; i <= 6; ++i)
        L.check(period_fast(s, i) == period_constant_term(s, i), "N=" + str(N) + " m=" + str(m) + " i=" + str(i));
    }
  for (int N = 1; N <= 4; ++N) {
    auto r = product_identity_check(N, 6);
    L.check(r.pass, "product identity N=" + str(N) + ": " + r.detail);
  }
}

// 11. Plot determinism and the oval at [1:1:1].
void c11(Ledger& L) {
  PlotConfig cfg;
  L.check(plot_locus(3, 1, cfg) == plot_locus(3, 1, cfg), "SVG not byte-identical");
  L.check(plot_locus(5, 0, cfg) == plot_locus(5, 0, cfg), "SVG not byte-identical");
  auto paths = locus_contour(3, 1, cfg);
  if (!has_closed_component_in(paths, 0.8, 1.2, 0.8, 1.2)) {
    std::string near;
    for (const auto& p : paths) {
      if (!p.closed) continue;
      double a = 1e300, b = -1e300;
      for (const auto& pt : p.pts) a = std::min(a, pt.first), b = std::max(b, pt.first);
      char buf[96];
      std::snprintf(buf, sizeof buf, " closed path spans x in [%.3f, %.3f]", a, b);
      near += buf;
    }
    L.fail("no closed component inside [0.8,1.2]^2;" + near);
  }
}

const char* kTitles[kCriteria] = {
    "Operator reproduction", "Order table",        "Monodromy profiles", "Mirror maps",
    "Deformed family",       "Kernel expansion",   "Conjecture suites",  "Loci",
    "Three-variable verification", "Oracle equivalence", "Plot determinism"};
const double kBudget[kCriteria] = {120, 120, 60, 120, 600, 180, 120, 300, 300, 180, 30};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriteria) throw DomainError("criterion out of range");
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  r.budget = kBudget[id - 1] + (id == 2 && opt.include_n9 ? 600 : 0);
  Ledger L;
  auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: c1(L); break;
      case 2: c2(L, opt.include_n9); break;
      case 3: c3(L); break;
      case 4: c4(L); break;
      case 5: c5(L); break;
      case 6: c6(L); break;
      case 7: c7(L); break;
      case 8: c8(L); break;
      case 9: c9(L); break;
      case 10: c10(L); break;
      case 11: c11(L); break;
    }
  } catch (const std::exception& e) {
    L.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // Budgets are part of the criterion. Criterion 2 shares its operators with 1 and 3.
  if (r.seconds > r.budget) L.fail("over the time budget");
  r.pass = L.ok;
  r.detail = L.detail;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, opt));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] %2d %s (%.1f s / %.0f s)", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.budget);
  std::string s = buf;
  if (!r.pass) s += ": " + r.detail;
  return s;
}

}  // namespace hbk
