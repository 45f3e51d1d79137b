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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hbk/polynomial.hpp"
#include "hbk/series.hpp"
#include "hbk/upoly.hpp"

namespace hbk {

struct PotentialSpec {
  int N = 2;
  int m = 2;               // number of factors; 2 is the diagonal potential
  bool deformed = false;   // r * prod(1+Y) + prod(1+1/Y)
  std::optional<Rational> r_value;  // specialize r (deformed only)
  std::vector<Rational> weights;    // m-fold parameters p_1..p_m, default all 1

  void validate() const;
  std::string key() const;  // "N4m2r", used for cache paths
};

SeriesQ phi_series(int N, int T);   // sum x^i / (i!)^N
SeriesQ dwork_series(int N, int T); // sum (Nm)!/(m!)^N t^m

// Torus variables Y1..Y_{N-1} (diagonal) or Y{j}_{l} (m-fold); a trailing
// "r" for the symbolic deformed case; p1..pm for the m-fold parameters.
SparsePolynomial build_potential(const PotentialSpec& spec);

// Constant term of the i-th power by direct Laurent powering. Result is a
// polynomial in r (constant unless deformed with symbolic r).
struct OracleOptions {
  std::size_t max_support = 2000000;
};
UPolyQ period_constant_term(const PotentialSpec& spec, int i, const OracleOptions& opt = {});

// Binomial / multinomial closed forms.
UPolyQ period_fast(const PotentialSpec& spec, int i);

Integer kernel_coefficient(int N, const std::vector<long>& j);

struct CheckReport {
  bool pass = true;
  std::string detail;  // first violation, empty on success
};
CheckReport product_identity_check(int N, int B);

// Coefficients c_0, c_1, ... produced on demand and memoized.
class CoefficientStream {
 public:
  enum class Provenance { ConstantTermOracle, BinomialClosedForm };
  CoefficientStream(PotentialSpec spec, Provenance prov, OracleOptions opt = {});

  const PotentialSpec& spec() const { return spec_; }
  Provenance provenance() const { return prov_; }
  std::string provenance_tag() const;

  // Ensures c_0..c_{n-1} exist and returns them.
  const std::vector<UPolyQ>& take(std::size_t n);
  // Rational view (throws DomainError if a coefficient depends on r).
  std::vector<Rational> take_rational(std::size_t n);

  // Instrumentation.
  std::size_t coefficients_computed() const { return computed_; }
  std::size_t laurent_products() const { return products_; }
  std::size_t cache_hits() const { return cache_hits_; }

  // Closed-form streams without specialization read and write this cache.
  void set_cache_dir(std::string dir) { cache_dir_ = std::move(dir); }

 private:
  void extend_oracle(std::size_t n);
  PotentialSpec spec_;
  Provenance prov_;
  OracleOptions opt_;
  std::vector<UPolyQ> c_;
  std::size_t computed_ = 0, products_ = 0, cache_hits_ = 0;
  std::string cache_dir_;
  // Oracle state: powers of the potential as torus-exponent -> r-polynomial.
  struct Laurent;
  std::vector<std::shared_ptr<Laurent>> powers_;
};

// Disk cache for closed-form streams: $dir/periods/<key>/coeffs.json in the
// series schema. Returns how many coefficients were loaded.
std::size_t cache_load(const std::string& dir, const PotentialSpec& spec, std::vector<UPolyQ>* out);
void cache_store(const std::string& dir, const PotentialSpec& spec, const std::vector<UPolyQ>& coeffs);

}  // namespace hbk
