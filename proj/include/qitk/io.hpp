// Copyright 2026 The qitk Authors
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

#include <variant>

#include "json.hpp"
#include "qitk/channels.hpp"
#include "qitk/circuits.hpp"

namespace qitk::io {

using json = nlohmann::json;

// State schema: {"dims":[2,2],"kind":"pure"|"mixed","re":[...],"im":[...]},
// mixed entries row-major.
using AnyState = std::variant<StateVector, DensityMatrix>;

json to_json(const StateVector& psi);
json to_json(const DensityMatrix& rho);
AnyState state_from_json(const json& j, double tol = kDefaultTol);
DensityMatrix density_from_json(const json& j, double tol = kDefaultTol);

// Matrix schema: {"re":[[...]],"im":[[...]]}.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Channel schema: {"dims":2,"kind":"tp"|"sub","elements":[matrix...]}.
json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j, double tol = kDefaultTol);

// Circuit schema: {"n":3,"ops":[{"kind":"gate","name":"H","targets":[0]},
//   {"kind":"gate","name":"X","targets":[2],"controls":[{"wire":0,"polarity":1}]},
//   {"kind":"measure","wires":[0]},
//   {"kind":"classical_gate","name":"X","targets":[1],"condition":{"bit":0,"value":1}}]}
// A gate named "U" carries its own "matrix".
json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j, double tol = kDefaultTol);

// Ensemble schema: {"ensemble":[{"p":0.5,"state":{...}}, ...]}.
Ensemble ensemble_from_json(const json& j, double tol = kDefaultTol);

/// Parses a file; malformed JSON raises kParse.
json read_json_file(const std::string& path);

}  // namespace qitk::io
