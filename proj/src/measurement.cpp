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

#include <cmath>
#include <random>
#include <sstream>

#include "qitk/circuits.hpp"

namespace qitk {

namespace {

void require_completeness(const Matrix& sum, double tol, const char* what) {
  const double r = max_abs(sum - Matrix::Identity(sum.rows(), sum.cols()));
  if (r > tol) {
    std::ostringstream msg;
    msg << what << " violates completeness (residual " << r << ")";
    throw Error(ErrorKind::kNotTracePreserving, msg.str());
  }
}

}  // namespace

void validate(const GeneralMeasurement& m, double tol) {
  if (m.operators.empty()) throw Error(ErrorKind::kInvalidArgument, "measurement has no operators");
  const Eigen::Index d = m.operators.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& op : m.operators) {
    require_square(op, "measurement operator");
    if (op.rows() != d) throw Error(ErrorKind::kDimensionMismatch, "measurement operators differ in size");
    sum += op.adjoint() * op;
  }
  require_completeness(sum, tol, "measurement");
}

void validate(const Povm& p, double tol) {
  if (p.elements.empty()) throw Error(ErrorKind::kInvalidArgument, "POVM has no elements");
  const Eigen::Index d = p.elements.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : p.elements) {
    require_square(e, "POVM element");
    if (e.rows() != d) throw Error(ErrorKind::kDimensionMismatch, "POVM elements differ in size");
    if (!is_psd(e, tol).ok) throw Error(ErrorKind::kNotPositive, "POVM element is not positive");
    sum += e;
  }
  require_completeness(sum, tol, "POVM");
}

std::vector<MeasurementOutcome> measure_general(const StateVector& psi,
                                                const GeneralMeasurement& m, double tol) {
  validate(m, tol);
  if (m.operators.front().rows() != psi.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "measurement does not match state size");
  }
  std::vector<MeasurementOutcome> out;
  for (std::size_t k = 0; k < m.operators.size(); ++k) {
    const Vector v = m.operators[k] * psi.amplitudes();
    MeasurementOutcome o;
    o.index = static_cast<int>(k);
    o.probability = v.squaredNorm();
    if (o.probability > tol) o.post_vector = StateVector::normalized(psi.dims(), v);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<MeasurementOutcome> measure_general(const DensityMatrix& rho,
                                                const GeneralMeasurement& m, double tol) {
  validate(m, tol);
  if (m.operators.front().rows() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "measurement does not match state size");
  }
  std::vector<MeasurementOutcome> out;
  for (std::size_t k = 0; k < m.operators.size(); ++k) {
    const Matrix post = m.operators[k] * rho.matrix() * m.operators[k].adjoint();
    MeasurementOutcome o;
    o.index = static_cast<int>(k);
    o.probability = std::max(0.0, post.trace().real());
    if (o.probability > tol) o.post_state = DensityMatrix(rho.dims(), post / o.probability, 1e-8);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<double> povm_probabilities(const DensityMatrix& rho, const Povm& p, double tol) {
  validate(p, tol);
  if (p.elements.front().rows() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "POVM does not match state size");
  }
  std::vector<double> out;
  for (const Matrix& e : p.elements) out.push_back((e * rho.matrix()).trace().real());
  return out;
}

ObservablePvm pvm_of_observable(const Matrix& observable, double tol) {
  const HermitianEig e = hermitian_eig(observable);
  ObservablePvm out;
  const Eigen::Index d = e.eigenvalues.size();
  for (Eigen::Index k = 0; k < d;) {
    Eigen::Index end = k + 1;
    while (end < d && e.eigenvalues(end) - e.eigenvalues(k) < tol) ++end;
    const Matrix v = e.eigenvectors.middleCols(k, end - k);
    out.eigenvalues.push_back(e.eigenvalues.segment(k, end - k).mean());
    out.projectors.push_back(v * v.adjoint());
    k = end;
  }
  return out;
}

std::vector<double> NeumarkDilation::probabilities(const DensityMatrix& rho) const {
  if (rho.dim() != system_dim) throw Error(ErrorKind::kDimensionMismatch, "state size mismatch");
  // U (rho (x) |0><0|) U^dag restricted to the image of the isometry.
  const Matrix ext = isometry * rho.matrix() * isometry.adjoint();
  std::vector<double> p;
  for (const Matrix& proj : projectors.operators) p.push_back((proj * ext).trace().real());
  return p;
}

NeumarkDilation neumark_dilate(const Povm& p, double tol) {
  validate(p, tol);
  NeumarkDilation out;
  out.system_dim = static_cast<int>(p.elements.front().rows());
  out.ancilla_dim = static_cast<int>(p.elements.size());
  const int d = out.system_dim, m = out.ancilla_dim;
  out.isometry = Matrix::Zero(static_cast<Eigen::Index>(d) * m, d);
  for (int k = 0; k < m; ++k) {
    const Matrix mk = matrix_sqrt_psd(p.elements[k], tol);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.isometry(static_cast<Eigen::Index>(i) * m + k, j) = mk(i, j);
  }
  // Place isometry column j at the input |j>|0>, complement in the rest.
  const Matrix full = complete_to_unitary(out.isometry, std::max(tol, 1e-8));
  out.unitary = Matrix(d * m, d * m);
  int spare = d;
  for (int col = 0; col < d * m; ++col) {
    if (col % m == 0) out.unitary.col(col) = full.col(col / m);
    else out.unitary.col(col) = full.col(spare++);
  }
  for (int k = 0; k < m; ++k) {
    Matrix ek = Matrix::Zero(m, m);
    ek(k, k) = 1.0;
    out.projectors.operators.push_back(kron(Matrix::Identity(d, d), ek));
  }
  return out;
}

Povm random_povm(int d, int outcomes, std::uint64_t seed) {
  if (d < 1 || outcomes < 1) throw Error(ErrorKind::kInvalidArgument, "POVM needs d, outcomes >= 1");
  std::vector<Matrix> raw;
  Matrix sum = Matrix::Zero(d, d);
  for (int k = 0; k < outcomes; ++k) {
    raw.push_back(random_density({d}, seed * 7919 + k).matrix());
    sum += raw.back();
  }
  // E_k = S^{-1/2} A_k S^{-1/2} sums to the identity.
  const HermitianEig e = hermitian_eig(sum);
  const Matrix inv_sqrt = e.eigenvectors *
                          e.eigenvalues.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
                          e.eigenvectors.adjoint();
  Povm p;
  for (const Matrix& a : raw) {
    Matrix ek = inv_sqrt * a * inv_sqrt;
    p.elements.push_back(0.5 * (ek + ek.adjoint()));
  }
  return p;
}

}  // namespace qitk
