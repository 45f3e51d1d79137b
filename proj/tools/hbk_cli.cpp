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

// hbk command-line tool. Exit codes: 0 success, 1 a requested check failed
// or the computation is unsupported, 2 usage or domain error, 3 resource guard.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "hbk/hbk.h"

namespace {

struct Globals {
  std::string config, format, cache_dir, out;
  int threads = 0;
  std::vector<std::string> sets;
};

int exit_code(hbk_status s) {
  switch (s) {
    case HBK_OK: return 0;
    case HBK_E_ARGUMENT:
    case HBK_E_DOMAIN: return 2;
    case HBK_E_RESOURCE: return 3;
    default: return 1;
  }
}

std::string quoted(const std::string& s) {
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') o += '\\';
    if (ch == '\n') {
      o += "\\n";
      continue;
    }
    o += ch;
  }
  return o + "\"";
}

int report(hbk_context* ctx, hbk_status s) {
  if (s == HBK_E_RESOURCE)
    std::fprintf(stderr, "{\"error\": \"resource\", \"message\": %s}\n", quoted(hbk_context_error(ctx)).c_str());
  else
    std::fprintf(stderr, "hbk: %s: %s\n", hbk_status_string(s), hbk_context_error(ctx));
  return exit_code(s);
}

int emit(hbk_context* ctx, const Globals& g, const std::function<hbk_status(hbk_result**)>& call) {
  hbk_result* r = nullptr;
  hbk_status s = call(&r);
  if (s != HBK_OK) return report(ctx, s);
  if (g.out.empty()) {
    std::fputs(hbk_result_text(r), stdout);
  } else {
    std::ofstream f(g.out, std::ios::binary);
    f << hbk_result_text(r);
    if (!f) {
      std::fprintf(stderr, "hbk: cannot write %s\n", g.out.c_str());
      hbk_result_destroy(r);
      return 2;
    }
  }
  int code = hbk_result_ok(r) ? 0 : 1;
  hbk_result_destroy(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods, Picard-Fuchs operators, mirror maps and kernel expansions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", hbk_version());
  Globals g;
  app.add_option("--config", g.config, "key = value configuration file");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "disk cache for period coefficients");
  app.add_option("--threads", g.threads, "parallelism degree")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", g.out, "write the result to a file");
  app.add_option("--set", g.sets, "override a configuration key: key=value");

  int N = 0, terms = 0, orders = 0, multi = 2, scale = -1, criterion = 0;
  int max_order = 0, max_degree = -1, verify_extra = -1;
  bool deformed = false, oracle = false, gamma = false, sturm = false, dwork = false, pf3 = false, closed = false;
  bool disc = false, points = false, group = false, n9 = false;
  std::string r_value, eps = "0", x0, x1, y0, y1;
  int grid = 0, size = 0;

  auto* period = app.add_subcommand("period", "period sequence c_0..c_T");
  period->add_option("--N", N)->required();
  period->add_option("--terms", terms)->required();
  period->add_flag("--deformed", deformed);
  period->add_flag("--oracle", oracle, "use the constant-term oracle");

  auto* guess = app.add_subcommand("guess", "minimal differential operator");
  guess->add_option("--N", N)->required();
  guess->add_flag("--deformed", deformed);
  guess->add_option("--max-order", max_order);
  guess->add_option("--max-degree", max_degree);
  guess->add_option("--verify-extra", verify_extra);
  guess->add_option("--terms", terms);

  auto* mono = app.add_subcommand("monodromy", "local exponents and Jordan profile at 0");
  mono->add_option("--N", N)->required();
  mono->add_flag("--deformed", deformed);
  mono->add_option("--r", r_value);

  auto* mirror = app.add_subcommand("mirror", "mirror map t(q)");
  mirror->add_option("--N", N)->required();
  mirror->add_option("--terms", terms)->required();
  mirror->add_flag("--deformed", deformed);

  auto* yuk = app.add_subcommand("yukawa", "Yukawa coupling and Lambert numbers");
  yuk->add_option("--N", N)->required();
  yuk->add_option("--terms", terms)->required();
  yuk->add_flag("--deformed", deformed);
  yuk->add_option("--scale", scale, "also report a_d / d^p");

  auto* kernel = app.add_subcommand("kernel", "kernel expansion polynomials P_m");
  kernel->add_option("--N", N)->required();
  kernel->add_option("--orders", orders)->required();
  kernel->add_flag("--gamma", gamma);
  kernel->add_flag("--sturm", sturm);
  kernel->add_flag("--dwork", dwork);
  kernel->add_flag("--verify-pf3", pf3);
  kernel->add_flag("--closed-form", closed);

  auto* locus = app.add_subcommand("locus", "singular locus Delta_N");
  locus->add_option("--N", N)->required();
  locus->add_option("--multi", multi, "number of variables minus one");
  locus->add_flag("--check-disc", disc);
  locus->add_flag("--singular-points", points);
  locus->add_flag("--group-law", group);

  auto* gl = app.add_subcommand("grouplaw", "group-law divisor D_N");
  gl->add_option("--N", N)->required();

  auto* plot = app.add_subcommand("plot", "SVG of Delta_N(x, y, 1) = eps");
  plot->add_option("--N", N)->required();
  plot->add_option("--eps", eps, "rational, e.g. 1 or -1000 or 1/10");
  plot->add_option("--x0", x0);
  plot->add_option("--x1", x1);
  plot->add_option("--y0", y0);
  plot->add_option("--y1", y1);
  plot->add_option("--grid", grid);
  plot->add_option("--size", size);

  auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
  verify->add_option("--criterion", criterion, "a single criterion 1..11");
  verify->add_flag("--n9", n9, "include the optional N = 9 order");

  auto* manifest = app.add_subcommand("manifest", "fixture digests in MANIFEST form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  hbk_context* ctx = nullptr;
  if (hbk_context_create(&ctx) != HBK_OK) return 3;
  struct Guard {
    hbk_context* c;
    ~Guard() { hbk_context_destroy(c); }
  } guard{ctx};

  auto set = [&](const char* k, const std::string& v) {
    if (hbk_context_set(ctx, k, v.c_str()) != HBK_OK) {
      std::fprintf(stderr, "hbk: %s\n", hbk_context_error(ctx));
      return false;
    }
    return true;
  };
  if (!g.config.empty() && hbk_context_load_config(ctx, g.config.c_str()) != HBK_OK) {
    std::fprintf(stderr, "hbk: %s\n", hbk_context_error(ctx));
    return 2;
  }
  for (const auto& kv : g.sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "hbk: --set expects key=value\n");
      return 2;
    }
    if (!set(kv.substr(0, eq).c_str(), kv.substr(eq + 1))) return 2;
  }
  bool ok = true;
  if (!g.format.empty()) ok = ok && set("format", g.format);
  if (!g.cache_dir.empty()) ok = ok && set("cache_dir", g.cache_dir);
  if (g.threads > 0) ok = ok && set("threads", std::to_string(g.threads));
  if (max_order > 0) ok = ok && set("max_order", std::to_string(max_order));
  if (max_degree >= 0) ok = ok && set("max_degree", std::to_string(max_degree));
  if (verify_extra >= 0) ok = ok && set("verify_extra", std::to_string(verify_extra));
  if (guess->parsed() && terms > 0) ok = ok && set("terms", std::to_string(terms));
  if (!x0.empty()) ok = ok && set("plot.x0", x0);
  if (!x1.empty()) ok = ok && set("plot.x1", x1);
  if (!y0.empty()) ok = ok && set("plot.y0", y0);
  if (!y1.empty()) ok = ok && set("plot.y1", y1);
  if (grid > 0) ok = ok && set("plot.grid", std::to_string(grid));
  if (size > 0) ok = ok && set("plot.size", std::to_string(size));
  if (!ok) return 2;

  if (period->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_period(ctx, N, terms, deformed, oracle, r); });
  if (guess->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_guess(ctx, N, deformed, r); });
  if (mono->parsed())
    return emit(ctx, g, [&](hbk_result** r) {
      return hbk_monodromy(ctx, N, deformed, r_value.empty() ? nullptr : r_value.c_str(), r);
    });
  if (mirror->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_mirror(ctx, N, terms, deformed, r); });
  if (yuk->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_yukawa(ctx, N, terms, deformed, scale, r); });
  if (kernel->parsed()) {
    unsigned f = (gamma ? HBK_KERNEL_GAMMA : 0) | (sturm ? HBK_KERNEL_STURM : 0) | (dwork ? HBK_KERNEL_DWORK : 0) |
                 (pf3 ? HBK_KERNEL_VERIFY_PF3 : 0) | (closed ? HBK_KERNEL_CLOSED_FORM : 0);
    return emit(ctx, g, [&](hbk_result** r) { return hbk_kernel(ctx, N, orders, f, r); });
  }
  if (locus->parsed()) {
    unsigned f = (disc ? HBK_LOCUS_CHECK_DISC : 0) | (points ? HBK_LOCUS_SINGULAR_POINTS : 0) |
                 (group ? HBK_LOCUS_GROUP_LAW : 0);
    return emit(ctx, g, [&](hbk_result** r) { return hbk_locus(ctx, N, multi, f, r); });
  }
  if (gl->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_grouplaw(ctx, N, r); });
  if (plot->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_plot(ctx, N, eps.c_str(), r); });
  if (verify->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_verify(ctx, criterion, n9, r); });
  if (manifest->parsed()) return emit(ctx, g, [&](hbk_result** r) { return hbk_fixture_manifest(ctx, r); });
  return 2;
}
