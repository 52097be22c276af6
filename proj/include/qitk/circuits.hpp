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

#include "qitk/gates.hpp"
#include "qitk/states.hpp"

namespace qitk {

struct Control {
  int wire = 0;
  int polarity = 1;  // 1: fire on |1>, 0: fire on |0>
};

struct Op {
  enum class Kind { kGate, kMeasure, kClassicalGate };

  Kind kind = Kind::kGate;
  Gate gate;
  std::vector<int> targets;
  std::vector<Control> controls;
  std::vector<int> wires;  // measured wires
  int condition_bit = -1;  // index into the classical record
  int condition_value = 1;
};

/// Ordered list of operations on n wires. Wire 0 is the most significant bit
/// of the computational-basis label.
class Circuit {
 public:
  explicit Circuit(int n_qubits = 1);

  int n_qubits() const { return n_; }
  const std::vector<Op>& ops() const { return ops_; }

  Circuit& gate(const Gate& g, std::vector<int> targets,
                std::vector<Control> controls = {});
  Circuit& gate(const std::string& name, std::vector<int> targets,
                std::vector<Control> controls = {});
  Circuit& measure(std::vector<int> wires);
  /// Gate applied only when classical bit `bit` of the record equals `value`.
  Circuit& classical_gate(const Gate& g, std::vector<int> targets, int bit,
                          int value = 1);
  Circuit& append(const Circuit& other);
  /// Same circuit placed on a wider register at the given wire offset.
  Circuit embedded(int n_total, int offset) const;

  /// Reversed order with adjoint gates. Measurement-free circuits only.
  Circuit inverse() const;
  bool has_measurements() const;
  int classical_bits() const;
  /// Count of gate nodes (measurements excluded).
  int gate_count() const;

 private:
  void validate(const Op& op) const;

  int n_;
  std::vector<Op> ops_;
};

/// Applies one gate node to an n-qubit amplitude vector in place.
void apply_gate_op(Vector& psi, int n, const Op& op);

/// Full 2^n x 2^n unitary; throws if the circuit measures.
Matrix unitary_of(const Circuit& c);

struct SimResult {
  StateVector state;
  std::vector<int> record;  // classical bits in measurement order
};

/// Sampled simulation; one PRNG stream seeded by `seed`.
SimResult simulate(const Circuit& c, const StateVector& input, std::uint64_t seed);

struct DensitySimResult {
  DensityMatrix state;
  /// Exact outcome distribution of every measurement node, in order.
  std::vector<std::vector<double>> outcome_distributions;
};

/// Unsampled density-matrix simulation. Measurement nodes dephase the
/// measured wires, which stay in the register; classically controlled nodes
/// act as quantum-controlled on the measured wire.
DensitySimResult simulate_density(const Circuit& c, const DensityMatrix& input);

/// Marginal distribution of the listed wires (wire 0 of the list most significant).
std::vector<double> marginal_probabilities(const Vector& psi, int n,
                                           const std::vector<int>& wires);

// Measurement formalisms.

struct GeneralMeasurement {
  std::vector<Matrix> operators;  // {M_m}, sum M^dag M = I
};

struct Povm {
  std::vector<Matrix> elements;  // {E_m} PSD, sum = I
};

struct MeasurementOutcome {
  int index = 0;
  double probability = 0.0;
  std::optional<StateVector> post_vector;
  std::optional<DensityMatrix> post_state;
};

void validate(const GeneralMeasurement& m, double tol = kDefaultTol);
void validate(const Povm& p, double tol = kDefaultTol);

std::vector<MeasurementOutcome> measure_general(const StateVector& psi,
                                                const GeneralMeasurement& m,
                                                double tol = kDefaultTol);
std::vector<MeasurementOutcome> measure_general(const DensityMatrix& rho,
                                                const GeneralMeasurement& m,
                                                double tol = kDefaultTol);
std::vector<double> povm_probabilities(const DensityMatrix& rho, const Povm& p,
                                       double tol = kDefaultTol);

/// Projective measurement of an observable: one projector per distinct
/// eigenvalue, eigenvalues ascending.
struct ObservablePvm {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;
};
ObservablePvm pvm_of_observable(const Matrix& observable, double tol = 1e-8);

/// Neumark dilation U|psi>|0> = sum_m sqrt(E_m)|psi>|m>.
struct NeumarkDilation {
  int system_dim = 0;
  int ancilla_dim = 0;
  Matrix isometry;  // (d*m) x d
  Matrix unitary;   // completion of the isometry on system (x) ancilla
  GeneralMeasurement projectors;  // I (x) |m><m| on the extended space
  /// Outcome probabilities of the projective measurement after the unitary.
  std::vector<double> probabilities(const DensityMatrix& rho) const;
};
NeumarkDilation neumark_dilate(const Povm& p, double tol = kDefaultTol);

Povm random_povm(int d, int outcomes, std::uint64_t seed);

// Circuit builders.

Matrix qft_matrix(int n);
/// Hadamards, controlled R_k = P(2 pi / 2^k), and closing SWAPs.
Circuit qft_circuit(int n);

struct GateTally {
  int single_qubit = 0;
  int controlled = 0;
  int swaps = 0;
  int compact() const { return single_qubit + controlled + swaps; }
  /// SWAP expanded into three CNOTs.
  int expanded() const { return single_qubit + controlled + 3 * swaps; }
};
GateTally tally(const Circuit& c);

/// H on wire 0 then CNOT(0 -> 1).
Circuit bell_circuit();

}  // namespace qitk
