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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qitk {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Default absolute tolerance for predicates and invariant checks.
inline constexpr double kDefaultTol = 1e-9;

/// Tolerance honouring the QITK_TOL environment variable, read once.
double global_tolerance();

enum class ErrorKind {
  kDimensionMismatch,
  kInvalidArgument,
  kNotHermitian,
  kNotUnitary,
  kNotPositive,
  kNotTracePreserving,
  kPromiseViolated,
  kExhausted,
  kParse,
};

const char* to_string(ErrorKind kind);

/// Structured error raised by every validating operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Boolean verdict paired with the residual it was decided on.
struct Check {
  bool ok;
  double residual;
  explicit operator bool() const { return ok; }
};

// Construction and validation.

/// Builds a rows x cols matrix from row-major entries; rejects NaN/Inf and
/// empty shapes.
Matrix make_matrix(int rows, int cols, const std::vector<cplx>& row_major);
void require_finite(const Matrix& m, const char* what = "matrix");
void require_square(const Matrix& m, const char* what = "matrix");
Matrix dagger(const Matrix& m);
double max_abs(const Matrix& m);
std::int64_t product(const std::vector<int>& dims);

// Tensor products and partial traces. Factor 0 is the most significant index.

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(const std::vector<Matrix>& factors);
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Decompositions.

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns
};

struct SvdResult {
  Matrix u;
  RealVector singular_values;  // descending
  Matrix v;                    // input = u * diag(s) * v
};

struct PolarResult {
  Matrix unitary_part;
  Matrix positive_part_right;  // J = sqrt(A^dag A), A = U J
  Matrix positive_part_left;   // K = sqrt(A A^dag), A = K U
};

HermitianEig hermitian_eig(const Matrix& m, double tol = kDefaultTol);
SvdResult svd(const Matrix& m);
PolarResult polar(const Matrix& m);

// Matrix functions on positive semidefinite input. Eigenvalues in [-tol, 0)
// are clamped to zero; anything below -tol raises kNotPositive.

Matrix matrix_sqrt_psd(const Matrix& m, double tol = kDefaultTol);
/// Base-2 logarithm on the support; the kernel maps to zero.
Matrix matrix_log2_psd(const Matrix& m, double tol = kDefaultTol);
/// Right absolute value sqrt(m^dag m).
Matrix matrix_abs(const Matrix& m);
double trace_norm(const Matrix& m);
/// Eigenvalues of a Hermitian matrix, ascending.
RealVector eigenvalues_hermitian(const Matrix& m, double tol = kDefaultTol);

// Predicates.

Check is_unitary(const Matrix& m, double tol = kDefaultTol);
Check is_hermitian(const Matrix& m, double tol = kDefaultTol);
Check is_psd(const Matrix& m, double tol = kDefaultTol);
Check is_projector(const Matrix& m, double tol = kDefaultTol);
Check is_density(const Matrix& m, double tol = kDefaultTol);

/// Completes an isometry (orthonormal columns) to a square unitary whose
/// leading columns are the isometry's columns.
Matrix complete_to_unitary(const Matrix& isometry, double tol = kDefaultTol);

/// Smallest |1 - |<a,b>|| style comparison: equality up to a global phase.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

}  // namespace qitk
