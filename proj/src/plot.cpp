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

#include "hbk/plot.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "hbk/errors.hpp"
#include "hbk/loci.hpp"

namespace hbk {

namespace {

// Coefficients as doubles, for grid evaluation only.
struct FastPoly {
  std::vector<std::pair<std::pair<int, int>, double>> terms;
  double operator()(double x, double y) const {
    double s = 0;
    for (const auto& [e, c] : terms) s += c * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
  }
};

// Edge ids: horizontal edge (i, j) -> 2*(j*(nx+1)+i), vertical -> that + 1.
struct Seg {
  long a, b;
  std::size_t cell;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

}  // namespace

std::vector<Polyline> contour(const SparsePolynomial& f, const PlotConfig& cfg) {
  if (cfg.grid < 32) throw DomainError("plot grid must be at least 32");
  if (f.nvars() != 2) throw DomainError("contour needs a polynomial in two variables");
  const auto& w = cfg.window;
  if (!(w.x0 < w.x1 && w.y0 < w.y1)) throw DomainError("empty plot window");
  FastPoly fp;
  for (const auto& [e, c] : f.terms()) fp.terms.push_back({{e[0], e[1]}, c.get_d()});
  const int n = cfg.grid;
  const double x0 = w.x0.get_d(), y0 = w.y0.get_d();
  const double hx = Rational(w.x1 - w.x0).get_d() / n, hy = Rational(w.y1 - w.y0).get_d() / n;
  auto X = [&](double i) { return x0 + i * hx; };
  auto Y = [&](double j) { return y0 + j * hy; };
  std::vector<double> v(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(j * (n + 1) + i)]; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) at(i, j) = fp(X(i), Y(j));
  auto hedge = [&](int i, int j) { return 2L * (j * (n + 1) + i); };
  auto vedge = [&](int i, int j) { return 2L * (j * (n + 1) + i) + 1; };
  std::map<long, std::pair<double, double>> point;
  auto cut = [&](long id, int i, int j) {
    if (point.count(id)) return;
    double a, b;
    bool horiz = id % 2 == 0;
    a = at(i, j);
    b = horiz ? at(i + 1, j) : at(i, j + 1);
    double t = a / (a - b);
    point[id] = horiz ? std::make_pair(X(i + t), Y(j)) : std::make_pair(X(i), Y(j + t));
  };
  std::vector<Seg> segs;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // Corners counter-clockwise from (i, j); nonnegative counts as inside.
      bool s0 = at(i, j) >= 0, s1 = at(i + 1, j) >= 0, s2 = at(i + 1, j + 1) >= 0, s3 = at(i, j + 1) >= 0;
      long e0 = hedge(i, j), e1 = vedge(i + 1, j), e2 = hedge(i, j + 1), e3 = vedge(i, j);
      std::vector<long> cuts;
      if (s0 != s1) cut(e0, i, j), cuts.push_back(e0);
      if (s1 != s2) cut(e1, i + 1, j), cuts.push_back(e1);
      if (s2 != s3) cut(e2, i, j + 1), cuts.push_back(e2);
      if (s3 != s0) cut(e3, i, j), cuts.push_back(e3);
      std::size_t cell = static_cast<std::size_t>(j * n + i);
      if (cuts.size() == 2) {
        segs.push_back({cuts[0], cuts[1], cell});
      } else if (cuts.size() == 4) {
        bool centre = fp(X(i + 0.5), Y(j + 0.5)) >= 0;
        // Corner 0 is separated from its neighbours unless the centre agrees with it.
        if (centre == s0) {
          segs.push_back({e0, e1, cell});
          segs.push_back({e2, e3, cell});
        } else {
          segs.push_back({e3, e0, cell});
          segs.push_back({e1, e2, cell});
        }
      }
    }
  // Chain segments through shared edges.
  std::map<long, std::vector<std::size_t>> by_edge;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    by_edge[segs[k].a].push_back(k);
    by_edge[segs[k].b].push_back(k);
  }
  std::vector<bool> used(segs.size(), false);
  auto next_seg = [&](long edge, std::size_t from) -> long {
    for (std::size_t k : by_edge[edge])
      if (k != from && !used[k]) return static_cast<long>(k);
    return -1;
  };
  std::vector<Polyline> out;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (used[k]) continue;
    // Walk backwards to an open end, if any, so open paths start there.
    std::size_t start = k, cur = k;
    long start_edge = segs[k].b, edge = segs[k].b;
    for (;;) {
      long nk = next_seg(edge, cur);
      if (nk < 0) {
        start = cur;
        start_edge = edge;
        break;
      }
      if (static_cast<std::size_t>(nk) == k) break;
      cur = static_cast<std::size_t>(nk);
      edge = segs[cur].a == edge ? segs[cur].b : segs[cur].a;
    }
    Polyline pl;
    pl.first_cell = segs[start].cell;
    cur = start;
    edge = start_edge;
    pl.pts.push_back(point[edge]);
    for (;;) {
      used[cur] = true;
      edge = segs[cur].a == edge ? segs[cur].b : segs[cur].a;
      pl.pts.push_back(point[edge]);
      long nk = next_seg(edge, cur);
      if (nk < 0) break;
      cur = static_cast<std::size_t>(nk);
    }
    pl.closed = pl.pts.size() > 2 && edge == start_edge;
    if (pl.closed) pl.pts.pop_back();
    out.push_back(std::move(pl));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Polyline& a, const Polyline& b) { return a.first_cell < b.first_cell; });
  return out;
}

SparsePolynomial locus_chart(int N, const Rational& eps) {
  SparsePolynomial d = delta(N).substitute(2, Rational(1));
  std::vector<std::string> xy{"x", "y"};
  SparsePolynomial out(xy);
  for (const auto& [e, c] : d.terms()) out.add_term({e[0], e[1]}, c);
  out.add_term({0, 0}, -eps);
  return out;
}

std::vector<Polyline> locus_contour(int N, const Rational& eps, const PlotConfig& cfg) {
  return contour(locus_chart(N, eps), cfg);
}

std::string plot_locus(int N, const Rational& eps, const PlotConfig& cfg) {
  auto paths = locus_contour(N, eps, cfg);
  const auto& w = cfg.window;
  double x0 = w.x0.get_d(), y1 = w.y1.get_d();
  double sx = cfg.size / Rational(w.x1 - w.x0).get_d(), sy = cfg.size / Rational(w.y1 - w.y0).get_d();
  auto px = [&](double x) { return fmt((x - x0) * sx); };
  auto py = [&](double y) { return fmt((y1 - y) * sy); };
  std::string s;
  std::string size = std::to_string(cfg.size);
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
       size + " " + size + "\">\n";
  s += "<title>Delta_" + std::to_string(N) + "(x,y,1) = " + eps.get_str() + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"white\" stroke=\"black\"/>\n";
  if (w.x0 <= 0 && 0 <= w.x1)
    s += "<line x1=\"" + px(0) + "\" y1=\"0\" x2=\"" + px(0) + "\" y2=\"" + size + "\" stroke=\"gray\"/>\n";
  if (w.y0 <= 0 && 0 <= w.y1)
    s += "<line x1=\"0\" y1=\"" + py(0) + "\" x2=\"" + size + "\" y2=\"" + py(0) + "\" stroke=\"gray\"/>\n";
  for (const auto& p : paths) {
    s += "<path d=\"M";
    for (std::size_t i = 0; i < p.pts.size(); ++i) s += (i ? " L" : "") + px(p.pts[i].first) + "," + py(p.pts[i].second);
    if (p.closed) s += " Z";
    s += "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

bool has_closed_component_in(const std::vector<Polyline>& paths, double a, double b, double c, double d) {
  for (const auto& p : paths) {
    if (!p.closed) continue;
    bool inside = true;
    for (const auto& [x, y] : p.pts)
      if (x < a || x > b || y < c || y > d) inside = false;
    if (inside) return true;
  }
  return false;
}

}  // namespace hbk
