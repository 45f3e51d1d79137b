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

#include "hbk/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hbk/errors.hpp"
#include "hbk/rational.hpp"

namespace hbk {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int to_int(const std::string& v, int lo, const std::string& where) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size() || x < lo || x > 1000000000L) throw DomainError("");
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw DomainError(where + ": expected an integer >= " + std::to_string(lo));
  }
}

Rational to_rational(const std::string& v, const std::string& where) {
  try {
    return parse_rational(v);
  } catch (const std::exception&) {
    throw DomainError(where + ": expected a rational number");
  }
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text, RunConfig c) {
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string where = "config line " + std::to_string(no);
    if (eq == std::string::npos) throw DomainError(where + ": expected key = value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "terms") c.terms = to_int(v, 0, where);
    else if (k == "max_order") c.max_order = to_int(v, 1, where);
    else if (k == "max_degree") c.max_degree = to_int(v, 0, where);
    else if (k == "verify_extra") c.verify_extra = to_int(v, 0, where);
    else if (k == "r_samples") c.r_samples = to_int(v, 1, where);
    else if (k == "max_support") c.max_support = to_int(v, 1, where);
    else if (k == "cache_dir") c.cache_dir = v;
    else if (k == "threads") c.threads = to_int(v, 1, where);
    else if (k == "format") {
      if (v != "json" && v != "text") throw DomainError(where + ": format is json or text");
      c.format = v;
    } else if (k == "plot.x0") c.plot.window.x0 = to_rational(v, where);
    else if (k == "plot.x1") c.plot.window.x1 = to_rational(v, where);
    else if (k == "plot.y0") c.plot.window.y0 = to_rational(v, where);
    else if (k == "plot.y1") c.plot.window.y1 = to_rational(v, where);
    else if (k == "plot.grid") c.plot.grid = to_int(v, 32, where);
    else if (k == "plot.size") c.plot.size = to_int(v, 16, where);
    else throw DomainError(where + ": unknown key '" + k + "'");
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), std::move(base));
}

std::string RunConfig::to_text() const {
  std::ostringstream o;
  o << "terms = " << terms << "\n"
    << "max_order = " << max_order << "\n"
    << "max_degree = " << max_degree << "\n"
    << "verify_extra = " << verify_extra << "\n"
    << "r_samples = " << r_samples << "\n"
    << "max_support = " << max_support << "\n"
    << "cache_dir = " << cache_dir << "\n"
    << "threads = " << threads << "\n"
    << "format = " << format << "\n"
    << "plot.x0 = " << plot.window.x0.get_str() << "\n"
    << "plot.x1 = " << plot.window.x1.get_str() << "\n"
    << "plot.y0 = " << plot.window.y0.get_str() << "\n"
    << "plot.y1 = " << plot.window.y1.get_str() << "\n"
    << "plot.grid = " << plot.grid << "\n"
    << "plot.size = " << plot.size << "\n";
  return o.str();
}

void RunConfig::apply_environment() {
  if (const char* d = std::getenv("HBK_CACHE_DIR"); d && *d) cache_dir = d;
}

}  // namespace hbk
