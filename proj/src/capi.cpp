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

#include "hbk/hbk.h"

#include <functional>
#include <future>
#include <string>

#include "hbk/acceptance.hpp"
#include "hbk/config.hpp"
#include "hbk/errors.hpp"
#include "hbk/fixtures.hpp"
#include "hbk/guessing.hpp"
#include "hbk/json_io.hpp"
#include "hbk/kernelexp.hpp"
#include "hbk/localsol.hpp"
#include "hbk/loci.hpp"
#include "hbk/mirror.hpp"
#include "hbk/plot.hpp"
#include "hbk/version.hpp"

using hbk::io::json;

struct hbk_context {
  hbk::RunConfig cfg;
  std::string error;
  std::string config_text;
};

struct hbk_result {
  std::string text;
  bool ok = true;
};

namespace {

using Body = std::function<void(hbk_context&, hbk_result&)>;

hbk_status guarded(hbk_context* ctx, hbk_result** out, const Body& body) {
  if (!ctx || !out) return HBK_E_ARGUMENT;
  *out = nullptr;
  ctx->error.clear();
  auto fail = [&](hbk_status s, const char* what) {
    ctx->error = what;
    return s;
  };
  try {
    auto r = std::make_unique<hbk_result>();
    body(*ctx, *r);
    *out = r.release();
    return HBK_OK;
  } catch (const hbk::DomainError& e) {
    return fail(HBK_E_DOMAIN, e.what());
  } catch (const hbk::UnsupportedError& e) {
    return fail(HBK_E_UNSUPPORTED, e.what());
  } catch (const hbk::ResourceError& e) {
    return fail(HBK_E_RESOURCE, e.what());
  } catch (const hbk::InvariantViolation& e) {
    return fail(HBK_E_INVARIANT, e.what());
  } catch (const std::exception& e) {
    return fail(HBK_E_INTERNAL, e.what());
  }
}

// Text rendering: one "key: value" line per top-level entry.
std::string render(const hbk_context& ctx, const json& j) {
  if (ctx.cfg.format == "json") return j.dump(1) + "\n";
  std::string s;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  } else if (j.is_array()) {
    for (const auto& v : j) s += (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  } else {
    s = j.dump() + "\n";
  }
  return s;
}

std::string plain(const hbk::Rational& q) { return q.get_str(); }

hbk::GuessConfig guess_config(const hbk::RunConfig& c) {
  hbk::GuessConfig g;
  g.max_order = c.max_order;
  g.max_degree = c.max_degree;
  g.verify_extra = c.verify_extra;
  g.terms = static_cast<std::size_t>(c.terms);
  return g;
}

std::size_t guess_terms(const hbk::RunConfig& c, int N) {
  if (c.terms > 0) return static_cast<std::size_t>(c.terms);
  return N <= 6 ? 120 : N == 7 ? 160 : N == 8 ? 240 : 500;
}

void check_N(int N, int lo = 2) {
  if (N < lo) throw hbk::DomainError("N must be at least " + std::to_string(lo));
}

hbk::ThetaOperator diagonal_operator(const hbk::RunConfig& c, int N) {
  check_N(N);
  hbk::PotentialSpec s;
  s.N = N;
  hbk::CoefficientStream st(s, hbk::CoefficientStream::Provenance::BinomialClosedForm);
  if (!c.cache_dir.empty()) st.set_cache_dir(c.cache_dir);
  auto op = hbk::guess_operator(st.take_rational(guess_terms(c, N)), guess_config(c));
  if (!op) throw hbk::UnsupportedError("no operator within the configured bounds");
  return *op;
}

hbk::ThetaOperator deformed_operator(const hbk::RunConfig& c, int N) {
  check_N(N);
  hbk::ParametricConfig p;
  p.base = guess_config(c);
  p.base.terms = guess_terms(c, N);
  p.max_points = static_cast<std::size_t>(c.r_samples);
  auto op = hbk::guess_parametric(hbk::deformed_family(N), p);
  if (!op) throw hbk::UnsupportedError("no parametric operator within the configured bounds");
  return *op;
}

json profile_json(const hbk::JordanProfile& p) {
  json a = json::array();
  for (const auto& b : p) a.push_back(json::array({plain(b.exponent), b.size}));
  return a;
}

json check_json(const hbk::CheckReport& r) { return json{{"pass", r.pass}, {"detail", r.detail}}; }

json poly_text(const hbk::SparsePolynomial& p) { return json{{"text", p.to_string()}, {"terms", hbk::io::polynomial_json(p)}}; }

}  // namespace

namespace {

json lambert_json(const std::vector<hbk::Rational>& a) {
  json j = json::array();
  for (const auto& x : a) j.push_back(plain(x));
  return j;
}

json lambert_json(const std::vector<hbk::UPolyQ>& a) {
  json j = json::array();
  for (const auto& x : a) j.push_back(x.to_string("r"));
  return j;
}

json series_text(const hbk::SeriesQ& s, bool) {
  json j = json::array();
  for (const auto& x : s.coeffs()) j.push_back(plain(x));
  return j;
}

json series_text(const hbk::SeriesQr& s, bool) {
  json j = json::array();
  for (const auto& x : s.coeffs()) j.push_back(x.to_string("r"));
  return j;
}

void mirror_common(hbk_context& c, hbk_result& r, int N, int terms, bool deformed, bool yuk, int scale) {
  if (terms < 1) throw hbk::DomainError("terms must be positive");
  json j{{"N", N}, {"deformed", deformed}, {"terms", terms}};
  if (deformed) {
    auto m = hbk::mirror_data(deformed_operator(c.cfg, N), terms, "r");
    j["t_of_q"] = series_text(m.t_of_q, true);
    if (yuk) {
      if (m.lambert.empty()) throw hbk::UnsupportedError("no Yukawa coupling for a chain of length 2");
      j["yukawa"] = series_text(m.yukawa, true);
    }
    j["lambert"] = lambert_json(m.lambert);
    if (scale >= 0) j["scaled"] = lambert_json(hbk::scaled(m.lambert, scale));
  } else {
    auto m = hbk::mirror_data(diagonal_operator(c.cfg, N), terms);
    j["t_of_q"] = series_text(m.t_of_q, false);
    if (yuk) {
      if (m.lambert.empty()) throw hbk::UnsupportedError("no Yukawa coupling for a chain of length 2");
      j["yukawa"] = series_text(m.yukawa, false);
    }
    j["lambert"] = lambert_json(m.lambert);
    if (scale >= 0) j["scaled"] = lambert_json(hbk::scaled(m.lambert, scale));
  }
  r.text = render(c, j);
}

}  // namespace

extern "C" {

const char* hbk_version(void) { return HBK_VERSION_STRING; }

const char* hbk_status_string(hbk_status s) {
  switch (s) {
    case HBK_OK: return "ok";
    case HBK_E_ARGUMENT: return "argument error";
    case HBK_E_DOMAIN: return "domain error";
    case HBK_E_UNSUPPORTED: return "unsupported";
    case HBK_E_RESOURCE: return "resource limit";
    case HBK_E_INVARIANT: return "invariant violation";
    case HBK_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hbk_status hbk_context_create(hbk_context** out) {
  if (!out) return HBK_E_ARGUMENT;
  *out = new (std::nothrow) hbk_context();
  if (!*out) return HBK_E_RESOURCE;
  (*out)->cfg.apply_environment();
  return HBK_OK;
}

void hbk_context_destroy(hbk_context* ctx) { delete ctx; }

hbk_status hbk_context_set(hbk_context* ctx, const char* key, const char* value) {
  if (!ctx || !key || !value) return HBK_E_ARGUMENT;
  try {
    ctx->cfg = hbk::RunConfig::parse(std::string(key) + " = " + value, ctx->cfg);
    return HBK_OK;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return HBK_E_ARGUMENT;
  }
}

hbk_status hbk_context_load_config(hbk_context* ctx, const char* path) {
  if (!ctx || !path) return HBK_E_ARGUMENT;
  try {
    ctx->cfg = hbk::RunConfig::load(path, ctx->cfg);
    return HBK_OK;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return HBK_E_ARGUMENT;
  }
}

const char* hbk_context_config(hbk_context* ctx) {
  if (!ctx) return "";
  ctx->config_text = ctx->cfg.to_text();
  return ctx->config_text.c_str();
}

const char* hbk_context_error(const hbk_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

hbk_status hbk_period(hbk_context* ctx, int N, int terms, int deformed, int oracle, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    check_N(N, 1);
    if (terms < 0) throw hbk::DomainError("terms must be non-negative");
    hbk::PotentialSpec s;
    s.N = N;
    s.deformed = deformed != 0;
    hbk::OracleOptions opt;
    opt.max_support = static_cast<std::size_t>(c.cfg.max_support);
    hbk::CoefficientStream st(s,
                              oracle ? hbk::CoefficientStream::Provenance::ConstantTermOracle
                                     : hbk::CoefficientStream::Provenance::BinomialClosedForm,
                              opt);
    if (!c.cfg.cache_dir.empty()) st.set_cache_dir(c.cfg.cache_dir);
    const auto& cs = st.take(static_cast<std::size_t>(terms) + 1);
    json a = json::array();
    for (const auto& p : cs) a.push_back(deformed ? json(p.to_string("r")) : json(plain(p.coeff(0))));
    r.text = render(c, json{{"N", N}, {"deformed", deformed != 0}, {"provenance", st.provenance_tag()}, {"coefficients", a}});
  });
}

hbk_status hbk_guess(hbk_context* ctx, int N, int deformed, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    auto op = deformed ? deformed_operator(c.cfg, N) : diagonal_operator(c.cfg, N);
    json factored = json::array();
    for (const auto& a : op.coeffs())
      factored.push_back(deformed ? a.to_string() : hbk::factored_string(hbk::UPolyQ::from_sparse(a, "t"), "t"));
    r.text = render(c, json{{"N", N},
                            {"order", op.order()},
                            {"degree", op.degree()},
                            {"operator", hbk::io::operator_json(op)},
                            {"factored", factored},
                            {"display", op.to_string()}});
  });
}

hbk_status hbk_monodromy(hbk_context* ctx, int N, int deformed, const char* rv, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    if (deformed && !rv) throw hbk::DomainError("the deformed family needs a value of r");
    json extra;
    hbk::ThetaOperator op = deformed ? deformed_operator(c.cfg, N).substitute("r", hbk::parse_rational(rv))
                                     : diagonal_operator(c.cfg, N);
    if (deformed) extra = plain(hbk::parse_rational(rv));
    auto ind = hbk::indicial(op, hbk::LocalPoint::zero());
    json ex = json::array();
    for (const auto& e : ind.exponents()) ex.push_back(plain(e));
    json j{{"N", N}, {"exponents", ex}, {"profile", profile_json(hbk::jordan_profile(op))}};
    if (deformed) j["r"] = extra;
    r.text = render(c, j);
  });
}

hbk_status hbk_mirror(hbk_context* ctx, int N, int terms, int deformed, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) { mirror_common(c, r, N, terms, deformed != 0, false, -1); });
}

hbk_status hbk_yukawa(hbk_context* ctx, int N, int terms, int deformed, int scale, hbk_result** out) {
  return guarded(ctx, out,
                 [=](hbk_context& c, hbk_result& r) { mirror_common(c, r, N, terms, deformed != 0, true, scale); });
}

hbk_status hbk_kernel(hbk_context* ctx, int N, int orders, unsigned flags, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    check_N(N);
    if (orders < 0) throw hbk::DomainError("orders must be non-negative");
    auto terms = hbk::kernel_expansion(N, orders);
    auto diag = hbk::kernel_diagnostics(N, orders);
    json arr = json::array();
    for (std::size_t m = 0; m < terms.size(); ++m) {
      const auto& d = diag[m];
      json e{{"m", static_cast<int>(m)}, {"P", terms[m].P.to_string()}, {"denominatorExponent", terms[m].denominator_exponent}};
      if (flags & HBK_KERNEL_GAMMA) {
        json g = json::array();
        for (const auto& x : d.gamma) g.push_back(x.get_str());
        e["gamma"] = g;
        e["gammaPositive"] = d.gamma_positive;
        if (m > 0 && !d.gamma_positive) r.ok = false;
      }
      if (flags & HBK_KERNEL_STURM) {
        e["realRoots"] = d.real_roots;
        e["realRooted"] = d.real_rooted;
        if (!d.real_rooted) r.ok = false;
      }
      if (flags & HBK_KERNEL_DWORK) {
        e["rowSum"] = d.row_sum.get_str();
        e["dworkOK"] = d.row_sum_ok;
        if (!d.row_sum_ok) r.ok = false;
      }
      arr.push_back(e);
    }
    if (!(flags & (HBK_KERNEL_VERIFY_PF3 | HBK_KERNEL_CLOSED_FORM))) {
      r.text = render(c, arr);
      return;
    }
    json j{{"terms", arr}};
    if (flags & HBK_KERNEL_VERIFY_PF3) {
      const auto& pf = hbk::fixtures::load("pf3.json");
      std::string key = std::to_string(N);
      if (!pf["operators"].contains(key)) throw hbk::UnsupportedError("no three-variable operator on file for this N");
      auto rep = hbk::verify_pf3(N, hbk::fixtures::polys(pf["operators"][key], pf["vars"].get<std::vector<std::string>>()),
                                 orders);
      j["verifyPf3"] = check_json(rep);
      r.ok = r.ok && rep.pass;
    }
    if (flags & HBK_KERNEL_CLOSED_FORM) {
      auto rep = hbk::closed_form_check(N, orders);
      j["closedForm"] = check_json(rep);
      r.ok = r.ok && rep.pass;
    }
    r.text = render(c, j);
  });
}

hbk_status hbk_locus(hbk_context* ctx, int N, int multi, unsigned flags, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    auto d = hbk::delta(N, multi);
    json j{{"N", N}, {"m", multi}, {"vars", hbk::locus_vars(multi)}, {"delta", poly_text(d)}};
    if (flags & HBK_LOCUS_CHECK_DISC) {
      if (multi != 2) throw hbk::UnsupportedError("the discriminant identity is for the plane curve");
      auto lit = hbk::discriminant_identity(N, true), sgn = hbk::discriminant_identity(N);
      j["discriminant"] = json{{"literal", check_json(lit)}, {"signed", check_json(sgn)}};
      r.ok = r.ok && lit.pass;
    }
    if (flags & HBK_LOCUS_SINGULAR_POINTS) {
      if (multi != 2) throw hbk::UnsupportedError("singular points are for the plane curve");
      json pts = json::array();
      for (const auto& s : hbk::singular_points(N)) {
        json co = json::array();
        for (const auto& x : s.point.coords) co.push_back(hbk::io::cyclotomic_json(x));
        pts.push_back(json{{"coords", co},
                           {"text", s.point.to_string()},
                           {"galoisReal", s.point.galois_real()},
                           {"hessianRank", s.hessian_rank},
                           {"linePairs", s.line_pairs}});
      }
      j["points"] = pts;
    }
    if (flags & HBK_LOCUS_GROUP_LAW) {
      j["groupLaw"] = poly_text(hbk::group_law_divisor(N));
      auto rel = hbk::group_law_relation(N);
      j["groupLawRelation"] = check_json(rel);
      r.ok = r.ok && rel.pass;
    }
    r.text = render(c, j);
  });
}

hbk_status hbk_grouplaw(hbk_context* ctx, int N, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    auto rel = hbk::group_law_relation(N);
    r.ok = rel.pass;
    r.text = render(c, json{{"N", N}, {"divisor", poly_text(hbk::group_law_divisor(N))}, {"relation", check_json(rel)}});
  });
}

hbk_status hbk_plot(hbk_context* ctx, int N, const char* eps, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    if (!eps) throw hbk::DomainError("missing epsilon");
    r.text = hbk::plot_locus(N, hbk::parse_rational(eps), c.cfg.plot);
  });
}

hbk_status hbk_verify(hbk_context* ctx, int criterion, int include_n9, hbk_result** out) {
  return guarded(ctx, out, [=](hbk_context& c, hbk_result& r) {
    hbk::AcceptanceOptions opt;
    opt.include_n9 = include_n9 != 0;
    std::vector<int> ids;
    if (criterion == 0)
      for (int i = 1; i <= hbk::kCriteria; ++i) ids.push_back(i);
    else
      ids.push_back(criterion);
    std::vector<hbk::CriterionResult> res(ids.size());
    if (c.cfg.threads > 1) {
      std::vector<std::future<hbk::CriterionResult>> fut;
      for (int id : ids) fut.push_back(std::async(std::launch::async, [id, opt] { return hbk::run_criterion(id, opt); }));
      for (std::size_t i = 0; i < fut.size(); ++i) res[i] = fut[i].get();
    } else {
      for (std::size_t i = 0; i < ids.size(); ++i) res[i] = hbk::run_criterion(ids[i], opt);
    }
    json rows = json::array();
    std::string table;
    for (const auto& x : res) {
      rows.push_back(json{{"criterion", x.id}, {"title", x.title}, {"pass", x.pass}, {"seconds", x.seconds}, {"detail", x.detail}});
      table += hbk::format_result(x) + "\n";
      r.ok = r.ok && x.pass;
    }
    r.text = c.cfg.format == "json" ? json{{"criteria", rows}}.dump(1) + "\n" : table;
  });
}

hbk_status hbk_fixture_manifest(hbk_context* ctx, hbk_result** out) {
  return guarded(ctx, out, [](hbk_context&, hbk_result& r) { r.text = hbk::fixtures::manifest_text(hbk::fixtures::directory()); });
}

const char* hbk_result_text(const hbk_result* r) { return r ? r->text.c_str() : ""; }
int hbk_result_ok(const hbk_result* r) { return r && r->ok ? 1 : 0; }
void hbk_result_destroy(hbk_result* r) { delete r; }

}  // extern "C"
