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

#include "hbk/parse.hpp"

#include <algorithm>
#include <cctype>

#include "hbk/errors.hpp"

namespace hbk {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  SparsePolynomial run() {
    SparsePolynomial p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  SparsePolynomial sum() {
    SparsePolynomial acc(vars_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        break;
      }
      SparsePolynomial t = product();
      acc += sign < 0 ? t * Rational(-1) : t;
      first = false;
    }
    return acc;
  }

  SparsePolynomial product() {
    SparsePolynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++i_;
        acc *= power();
      } else if (peek('/')) {
        ++i_;
        SparsePolynomial d = power();
        if (!d.is_constant() || d.constant_value() == 0) fail("division only by nonzero constants");
        acc *= SparsePolynomial(vars_, 1 / d.constant_value());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  SparsePolynomial power() {
    SparsePolynomial base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(st, i_ - st))));
    }
    return base;
  }

  SparsePolynomial atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      SparsePolynomial p = sum();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return SparsePolynomial(vars_, Rational(Integer(s_.substr(st, i_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // Longest variable name that matches here.
      std::size_t best = 0, idx = 0;
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (s_.compare(i_, vars_[k].size(), vars_[k]) == 0 && vars_[k].size() > best) {
          best = vars_[k].size();
          idx = k;
        }
      if (best == 0) fail("unknown variable");
      i_ += best;
      return SparsePolynomial::variable(vars_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t i_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace hbk
