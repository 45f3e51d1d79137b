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

#include "hbk/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "hbk/errors.hpp"
#include "hbk/parse.hpp"

namespace hbk::fixtures {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string directory() {
  if (const char* d = std::getenv("HBK_FIXTURE_DIR"); d && *d) return d;
  return HBK_FIXTURE_DIR;
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvariantViolation("cannot read fixture " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::map<std::string, std::string> read_manifest(const std::string& dir) {
  std::map<std::string, std::string> m;
  std::istringstream in(slurp(fs::path(dir) / "MANIFEST"));
  std::string digest, name;
  while (in >> digest >> name) m[name] = digest;
  return m;
}

std::mutex g_mu;
std::map<std::string, json> g_cache;

}  // namespace

const json& load(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_mu);
  std::string dir = directory();
  std::string key = dir + "/" + name;
  auto it = g_cache.find(key);
  if (it != g_cache.end()) return it->second;
  auto manifest = read_manifest(dir);
  auto mit = manifest.find(name);
  if (mit == manifest.end()) throw InvariantViolation("fixture " + name + " is not listed in MANIFEST");
  std::string bytes = slurp(fs::path(dir) / name);
  if (hex(fnv1a64(bytes)) != mit->second)
    throw InvariantViolation("fixture " + name + " does not match its MANIFEST digest");
  return g_cache.emplace(key, json::parse(bytes)).first->second;
}

std::string manifest_text(const std::string& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += hex(fnv1a64(slurp(fs::path(dir) / n))) + "  " + n + "\n";
  return out;
}

std::uint64_t manifest_digest() { return fnv1a64(slurp(fs::path(directory()) / "MANIFEST")); }

SparsePolynomial poly(const json& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text.get<std::string>(), vars);
}

std::vector<SparsePolynomial> polys(const json& list, const std::vector<std::string>& vars) {
  std::vector<SparsePolynomial> out;
  for (const auto& t : list) out.push_back(poly(t, vars));
  return out;
}

ThetaOperator theta_operator(const json& list, const std::vector<std::string>& vars, const std::string& main_var) {
  return ThetaOperator(polys(list, vars), main_var);
}

}  // namespace hbk::fixtures
