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
#include <functional>
#include <vector>

#include "qitk/states.hpp"

namespace qitk {

struct MajorizationReport {
  std::vector<double> prefix_sums_x;
  std::vector<double> prefix_sums_y;
  bool x_majorized_by_y = false;
  bool y_majorized_by_x = false;
};

/// Shorter vector is zero-padded; both sorted descending.
MajorizationReport majorizes(std::vector<double> x, std::vector<double> y,
                             double tol = 1e-12);

/// |psi> -> |phi> by LOCC with certainty iff lambda_psi is majorized by lambda_phi.
bool locc_convertible(const StateVector& psi, const StateVector& phi, int cut = 1);

double entanglement_entropy(const StateVector& psi, int cut = 1);
/// sqrt(2 (1 - Tr rho_A^2))
double concurrence_pure(const StateVector& psi, int cut = 1);
/// |<psi*| Y (x) Y |psi>|
double concurrence_spin_flip(const StateVector& psi);
/// 2 |psi_00 psi_11 - psi_01 psi_10|
double concurrence_determinant(const StateVector& psi);
/// Wootters: max(0, l1 - l2 - l3 - l4).
double concurrence_mixed_2q(const DensityMatrix& rho);
/// Binary entropy of (1 + sqrt(1 - c^2)) / 2.
double eof_from_concurrence(double c);
double entanglement_of_formation_2q(const DensityMatrix& rho);

/// Transpose of one factor in the computational basis.
Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem);
bool is_ppt(const DensityMatrix& rho, int subsystem = 0, double tol = kDefaultTol);
double negativity(const DensityMatrix& rho, int subsystem = 0);

/// (1/sqrt d) sum_j |j, j>
StateVector maximally_entangled(int d);
DensityMatrix werner_state(double p);

/// One round of LOCC: Alice applies {A_j} on factor 0, announces j, Bob
/// applies unitary B_j on factor 1.
DensityMatrix locc_one_way(const DensityMatrix& rho, const std::vector<Matrix>& alice,
                           const std::vector<Matrix>& bob);

/// Non-tight upper bound on the convex-roof concurrence from random pure
/// decompositions of rho.
double concurrence_roof_upper_bound(const DensityMatrix& rho, int trials,
                                    std::uint64_t seed);

struct SchurConcavityReport {
  bool symmetric = true;
  bool derivative_condition = true;
  bool passes() const { return symmetric && derivative_condition; }
};
/// Samples interior points of the probability simplex of size `dim`.
SchurConcavityReport schur_concavity_check(
    const std::function<double(const std::vector<double>&)>& f, int dim, int trials,
    std::uint64_t seed);

}  // namespace qitk
