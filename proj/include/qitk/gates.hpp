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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qitk/linalg.hpp"

namespace qitk {

/// A named unitary on `arity` qubits. Classical reversible gates may carry a
/// basis permutation instead of a dense matrix; `dense()` materializes it.
struct Gate {
  std::string name;
  int arity = 1;
  Matrix matrix;
  std::vector<std::uint64_t> permutation;  // |k> -> |permutation[k]>

  bool is_permutation() const { return !permutation.empty(); }
  Matrix dense() const;
  Gate adjoint() const;
};

/// Catalog lookup: I X Y Z H T S TDG SDG CNOT CZ SWAP TOFFOLI, plus the
/// parameterized spellings "P(phi)" and "Rn(nx,ny,nz,theta)".
Gate standard_gate(const std::string& name);
Gate phase_gate(double phi);
/// Wraps an arbitrary unitary; validates shape and unitarity.
Gate custom_gate(const std::string& name, const Matrix& u, double tol = kDefaultTol);
Gate permutation_gate(const std::string& name, int arity,
                      std::vector<std::uint64_t> permutation);

/// Pauli matrix sigma_k, k = 0 (identity), 1 (X), 2 (Y), 3 (Z).
Matrix pauli(int k);

struct RotationSpec {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
};

/// R_n(theta) = cos(theta/2) I - i sin(theta/2) n.sigma
Gate rotation(const RotationSpec& spec);
Matrix rz(double theta);
Matrix ry(double theta);

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)
struct ZyzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};
ZyzAngles zyz_decompose(const Matrix& u, double tol = kDefaultTol);

/// U = e^{i alpha} A X B X C with ABC = I.
struct AbcDecomposition {
  double alpha = 0.0;
  Matrix a, b, c;
};
AbcDecomposition abc_decompose(const Matrix& u, double tol = kDefaultTol);

/// Single-qubit unitary as e^{i phase} R_axis(angle) with angle in [0, pi].
struct AxisAngle {
  double phase = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
};
AxisAngle rotation_of(const Matrix& u);

/// Largest singular value of U - V.
double approximation_error(const Matrix& u, const Matrix& v);
/// min over global phase of approximation_error(U, e^{i phi} V).
double projective_error(const Matrix& u, const Matrix& v);
/// Phase phi attaining projective_error.
double aligning_phase(const Matrix& u, const Matrix& v);

struct HtWord {
  std::string letters;  // "THTH" means the product T*H*T*H
  Matrix value;
  double phase = 0.0;   // value * e^{i phase} is the aligned approximation
  double error = 0.0;   // projective error to the target
  bool found = false;   // error <= epsilon
  std::size_t explored = 0;
};

Matrix ht_word_value(const std::string& letters);
/// Breadth-first search over {H,T} words up to `max_len` letters with a
/// coarse SU(2) grid as visited set. Best-effort: returns the best word seen.
HtWord ht_approximate(const Matrix& target, double epsilon, int max_len);

}  // namespace qitk
