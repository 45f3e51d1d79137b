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

#include <json.hpp>

#include "hbk/cyclotomic.hpp"
#include "hbk/operator.hpp"
#include "hbk/polynomial.hpp"
#include "hbk/series.hpp"
#include "hbk/shaped.hpp"
#include "hbk/upoly.hpp"

namespace hbk::io {

using json = nlohmann::ordered_json;

// All integers travel as decimal strings.
json rational_json(const Rational& q);  // {"n": "...", "d": "..."}
Rational rational_from_json(const json& j);

json polynomial_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const json& j);

json upoly_json(const UPolyQ& p, const std::string& var);
UPolyQ upoly_from_json(const json& j, const std::string& var);

json series_json(const TruncatedSeries<Rational>& s);
json series_json(const TruncatedSeries<UPolyQ>& s, const std::string& param);
TruncatedSeries<Rational> series_from_json(const json& j);

json operator_json(const ThetaOperator& op);
// Accepts {"theta": bool, "var": name (default "t"), "coeffs": [...]}.
ThetaOperator operator_from_json(const json& j);

json shaped_json(const ShapedRational& s);
json cyclotomic_json(const CyclotomicNumber& c);

}  // namespace hbk::io
