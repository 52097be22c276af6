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
#include <utility>
#include <vector>

#include "qitk/linalg.hpp"

namespace qitk {

using Dims = std::vector<int>;

/// Normalized pure state over a tensor factorization.
class StateVector {
 public:
  StateVector() = default;
  /// Validates length and normalization.
  StateVector(Dims dims, Vector amplitudes, double tol = kDefaultTol);
  /// Normalizes the input instead of rejecting it; zero vectors still fail.
  static StateVector normalized(Dims dims, Vector amplitudes);
  static StateVector basis(Dims dims, std::int64_t index);
  static StateVector qubits(int n, std::int64_t index) {
    return basis(Dims(n, 2), index);
  }

  const Dims& dims() const { return dims_; }
  const Vector& amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  Matrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  Dims dims_;
  Vector amps_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(Dims dims, Matrix m, double tol = kDefaultTol);
  explicit DensityMatrix(const StateVector& psi);
  static DensityMatrix maximally_mixed(Dims dims);

  const Dims& dims() const { return dims_; }
  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Dims dims_;
  Matrix m_;
};

struct Ensemble {
  std::vector<std::pair<double, DensityMatrix>> entries;

  /// Validates nonnegative probabilities summing to one and matching dims.
  static Ensemble make(std::vector<std::pair<double, DensityMatrix>> entries,
                       double tol = kDefaultTol);
  static Ensemble from_pure(const std::vector<std::pair<double, StateVector>>& entries,
                            double tol = kDefaultTol);
};

struct BlochVector {
  std::array<double, 3> v{0.0, 0.0, 0.0};
  double norm() const;
};

struct SchmidtDecomposition {
  RealVector coefficients;  // sqrt(lambda_j), descending, above cutoff
  Matrix left_basis;        // columns |v_j>
  Matrix right_basis;       // columns |w_j>
  int rank() const { return static_cast<int>(coefficients.size()); }
  RealVector weights() const { return coefficients.array().square(); }
};

inline constexpr double kSchmidtCutoff = 1e-10;

DensityMatrix density_from_ensemble(const Ensemble& e);
double purity(const DensityMatrix& rho);
bool is_pure(const DensityMatrix& rho, double tol = kDefaultTol);

BlochVector bloch_from_qubit(const DensityMatrix& rho);
DensityMatrix qubit_from_bloch(const BlochVector& v, double tol = kDefaultTol);

/// Schmidt decomposition across the cut after the first `cut` factors.
SchmidtDecomposition schmidt(const StateVector& psi, int cut);
/// Canonical purification with a reference system of dimension dim(rho).
StateVector purify(const DensityMatrix& rho);

/// Reduced state on the kept subsystems.
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// |<a|b>|.
double overlap_abs(const StateVector& a, const StateVector& b);
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = kDefaultTol);

StateVector random_pure(const Dims& dims, std::uint64_t seed);
DensityMatrix random_density(const Dims& dims, std::uint64_t seed);
/// Haar-random unitary via QR of a complex Ginibre matrix.
Matrix random_unitary(int d, std::uint64_t seed);

// Named two-qubit states.
StateVector bell_phi_plus();
StateVector bell_phi_minus();
StateVector bell_psi_plus();
StateVector bell_psi_minus();

}  // namespace qitk
