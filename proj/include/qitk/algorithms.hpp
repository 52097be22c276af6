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
#include <optional>
#include <vector>

#include "qitk/circuits.hpp"

namespace qitk {

/// Table-backed function f: {0,1}^n_in -> {0,1}^n_out.
struct BooleanOracle {
  int n_in = 1;
  int n_out = 1;
  std::vector<std::uint64_t> table;

  static BooleanOracle make(int n_in, int n_out, std::vector<std::uint64_t> table);
  /// Permutation |x>|y> -> |x>|y xor f(x)>, x on the leading wires.
  Gate unitary() const;
};

inline constexpr const char* kOracleGateName = "ORACLE";

/// Number of oracle nodes a circuit executes.
int oracle_applications(const Circuit& c);

enum class DeutschResult { kConstant, kBalanced };

struct DeutschReport {
  DeutschResult result = DeutschResult::kConstant;
  double p_one = 0.0;  // probability of reading 1 on the first wire
  int oracle_calls = 0;
};

Circuit deutsch_circuit(const BooleanOracle& f);
DeutschReport deutsch(const BooleanOracle& f);

/// Returns s != 0 when f(x) = f(x xor s) for all x and f is two-to-one.
std::optional<std::uint64_t> simon_secret(const BooleanOracle& f);
Circuit simon_circuit(const BooleanOracle& f);

struct SimonReport {
  std::uint64_t s = 0;
  int oracle_calls = 0;
  std::vector<std::uint64_t> samples;
};

/// Samples z from the circuit until n-1 independent z are found, then
/// returns the nonzero null-space vector. Throws kExhausted past max_calls.
SimonReport simon(const BooleanOracle& f, std::uint64_t seed, int max_calls = 1000);
/// One circuit run: simulate, measure the input register.
std::uint64_t simon_sample(const Circuit& c, int n, std::uint64_t seed);
/// Nonzero solutions s of z.s = 0 for all rows, given rank n-1.
std::optional<std::uint64_t> gf2_null_vector(const std::vector<std::uint64_t>& rows, int n);
int gf2_rank(const std::vector<std::uint64_t>& rows, int n);

struct PhaseEstimationInstance {
  Matrix unitary;
  StateVector eigenvector;
  int n_bits = 1;
};

struct PhaseReport {
  std::vector<double> distribution;  // over j, estimate j / 2^n
  int best_index = 0;                // argmax
  double estimate = 0.0;
  double phase = 0.0;                // exact phi in [0, 1) from the eigenvalue
};

Circuit phase_estimation_circuit(const PhaseEstimationInstance& inst);
PhaseReport phase_estimate(const PhaseEstimationInstance& inst, double tol = kDefaultTol);
/// |sin(2^n pi delta) / (2^n sin(pi delta))|^2 with delta = phi - j/2^n.
double phase_probability_closed_form(double phi, int n, int j);
/// Index of the n-bit fraction nearest to phi modulo 1.
int nearest_phase_index(double phi, int n);

struct GroverInstance {
  int n = 1;
  std::vector<std::uint64_t> solutions;

  static GroverInstance make(int n, std::vector<std::uint64_t> solutions);
  std::uint64_t N() const { return std::uint64_t{1} << n; }
  std::uint64_t M() const { return solutions.size(); }
};

int grover_k0(std::uint64_t N, std::uint64_t M);
double grover_theta(std::uint64_t N, std::uint64_t M);
/// sin^2((2k+1) theta / 2)
double grover_success(const GroverInstance& inst, int k);

/// n+1 wires: search register plus an oracle qubit prepared in |->.
Circuit grover_circuit(const GroverInstance& inst, int k);
/// Exact distribution of the search register after k iterations.
std::vector<double> grover(const GroverInstance& inst, int k);
/// Success probability after each of 0..k_max iterations, by simulation.
std::vector<double> grover_success_series(const GroverInstance& inst, int k_max);

/// |<beta| e^{-iHt} |psi>|^2 for H = |beta><beta| + |psi><psi|, 2D subspace.
double grover_hamiltonian(const GroverInstance& inst, double t);
/// Same quantity by exponentiating H on the full 2^n space.
double grover_hamiltonian_dense(const GroverInstance& inst, double t);

}  // namespace qitk
