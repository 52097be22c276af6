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

#include <cstdint>
#include <vector>

#include "qitk/circuits.hpp"

namespace qitk {

/// Unitary acting nontrivially only on basis states i < j.
struct TwoLevelUnitary {
  int dim = 2;
  int i = 0;
  int j = 1;
  Matrix block;  // 2x2, rows/cols ordered (i, j)

  Matrix embedded() const;
};

/// Factors F_1..F_k with U = F_1 F_2 ... F_k and k <= d(d-1)/2.
std::vector<TwoLevelUnitary> two_level_decompose(const Matrix& u,
                                                 double tol = kDefaultTol);
Matrix multiply_factors(const std::vector<TwoLevelUnitary>& factors, int dim);

/// Gray path from s to t, flipping differing bits from the last wire upward.
std::vector<std::uint64_t> gray_path(std::uint64_t s, std::uint64_t t, int n);

/// Routing multi-controlled NOTs, one multi-controlled V, and the undo.
Circuit gray_synthesize(const TwoLevelUnitary& t, int n);

/// Controlled-U on (control 0, target 1) built from the ABC decomposition:
/// C, CNOT, B, CNOT, A on the target and P(alpha) on the control.
Circuit controlled_u_circuit(const Matrix& u);

/// Toffoli (controls 0, 1; target 2) from H, S, T, T^dag and CNOT.
Circuit toffoli_circuit();

/// C^n(U) with controls 0..n-1, n-1 work qubits n..2n-2 and target 2n-1.
Circuit multi_controlled_with_ancillas(const Matrix& u, int n_controls);

}  // namespace qitk
