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

#include <string>
#include <vector>

#include "hbk/operator.hpp"
#include "hbk/series.hpp"

namespace hbk {

// Frobenius data at a point of maximal unipotent type and the q-series
// derived from it. Series in q use the variable "q".
template <typename R>
struct MirrorData {
  TruncatedSeries<R> y0, phi1, phi2;  // phi2 empty (order 0, zero) when the chain has length 2
  TruncatedSeries<R> t_of_q;
  TruncatedSeries<R> yukawa;          // order 0 when unavailable
  std::vector<R> lambert;             // a_1..a_T, empty when unavailable
};
using MirrorDataQ = MirrorData<Rational>;
using MirrorDataQr = MirrorData<UPolyQ>;

// Plain operators over Q use the canonical basis from frobenius_basis.
MirrorDataQ mirror_data(const ThetaOperator& op, int T);
// Operators over Q[param] use the epsilon chain at exponent 0.
MirrorDataQr mirror_data(const ThetaOperator& op, int T, const std::string& param);

SeriesQ mirror_map(const ThetaOperator& op, int T);
SeriesQr mirror_map(const ThetaOperator& op, int T, const std::string& param);
SeriesQ yukawa(const ThetaOperator& op, int T);
SeriesQr yukawa(const ThetaOperator& op, int T, const std::string& param);

// a_d with Sum_d a_d q^d / (1 - q^d) = s; s[0] must vanish.
std::vector<Rational> lambert_invert(const SeriesQ& s);
std::vector<UPolyQ> lambert_invert(const SeriesQr& s);
// The inverse map, for round trips.
SeriesQ lambert_sum(const std::vector<Rational>& a, int T);

// a_d / d^p.
std::vector<Rational> scaled(const std::vector<Rational>& a, int p);
std::vector<UPolyQ> scaled(const std::vector<UPolyQ>& a, int p);

int moebius(int n);

}  // namespace hbk
