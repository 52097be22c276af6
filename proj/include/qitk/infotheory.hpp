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
#include <utility>
#include <vector>

#include "qitk/channels.hpp"
#include "qitk/circuits.hpp"

namespace qitk {

// All logarithms are base 2; entropies are in bits.

struct ProbDist {
  std::vector<double> probs;
  static ProbDist make(std::vector<double> p, double tol = kDefaultTol);
};

/// p(x, y), rows indexed by x.
struct JointDist {
  RealMatrix table;
  static JointDist make(RealMatrix table, double tol = kDefaultTol);
  ProbDist marginal_x() const;
  ProbDist marginal_y() const;
};

// Classical distances.
double trace_distance_c(const ProbDist& p, const ProbDist& q);
double fidelity_c(const ProbDist& p, const ProbDist& q);

// Classical entropies.
double shannon(const ProbDist& p);
double shannon(const std::vector<double>& p);
/// +infinity when some p_x > 0 has q_x = 0.
double relative_entropy_c(const ProbDist& p, const ProbDist& q);
double joint_entropy(const JointDist& j);
double conditional_entropy(const JointDist& j);  // H(X|Y)
double mutual_information(const JointDist& j);   // H(X:Y)
double binary_entropy(double p);

// Quantum distances.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Tr|sqrt(sigma) sqrt(rho)| via singular values.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct FuchsVanDeGraaf {
  double lower;  // 1 - F
  double distance;
  double upper;  // sqrt(1 - F^2)
};
FuchsVanDeGraaf fuchs_van_de_graaf(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Two-outcome projective measurement onto the positive part of rho - sigma
/// and its complement; its outcome distributions attain the trace distance.
Povm optimal_distinguishing_measurement(const DensityMatrix& rho,
                                        const DensityMatrix& sigma);

struct GateFidelityResult {
  double value;          // upper bound on the minimum over pure states
  StateVector argmin;    // certificate state
  int samples;
};

/// min_psi F(U|psi>, E(|psi><psi|)) by seeded sampling plus coordinate descent.
GateFidelityResult gate_fidelity(const Matrix& u, const KrausChannel& ch,
                                 std::uint64_t seed, int samples = 4096);

/// Purifications |psi>, |phi> with |<psi|phi>| = F(rho, sigma).
std::pair<StateVector, StateVector> uhlmann_purifications(const DensityMatrix& rho,
                                                          const DensityMatrix& sigma);

// Quantum entropies.
double von_neumann(const DensityMatrix& rho);
/// +infinity when supp(rho) is not inside supp(sigma).
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Entropy of the reduced state on `keep`.
double subsystem_entropy(const DensityMatrix& rho, const std::vector<int>& keep);

struct BipartiteEntropies {
  double s_a;
  double s_b;
  double s_ab;
  double conditional;  // S(A|B)
  double mutual;       // S(A:B)
};
/// A = factors before `cut`, B = the rest.
BipartiteEntropies bipartite_entropies(const DensityMatrix& rho, int cut);

double holevo_chi(const Ensemble& e);
/// Joint distribution p(x, y) = p_x Tr(E_y rho_x).
JointDist ensemble_measurement_joint(const Ensemble& e, const Povm& p);

inline constexpr double kSupportCutoff = 1e-10;

}  // namespace qitk
