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

#include "qitk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qitk/gates.hpp"
#include "qitk/infotheory.hpp"

namespace qitk {

namespace {

std::vector<double> schmidt_weights(const StateVector& psi, int cut) {
  const RealVector w = schmidt(psi, cut).weights();
  return {w.data(), w.data() + w.size()};
}

void require_two_qubits(const Dims& dims) {
  if (product(dims) != 4) throw Error(ErrorKind::kDimensionMismatch, "expected a two-qubit state");
}

Matrix yy() { return kron(pauli(2), pauli(2)); }

}  // namespace

MajorizationReport majorizes(std::vector<double> x, std::vector<double> y, double tol) {
  for (double v : x)
    if (!(v >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "majorization needs nonnegative entries");
  for (double v : y)
    if (!(v >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "majorization needs nonnegative entries");
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  MajorizationReport r;
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += x[k];
    sy += y[k];
    r.prefix_sums_x.push_back(sx);
    r.prefix_sums_y.push_back(sy);
  }
  const bool totals = std::abs(sx - sy) <= tol;
  r.x_majorized_by_y = totals;
  r.y_majorized_by_x = totals;
  for (std::size_t k = 0; k < n; ++k) {
    if (r.prefix_sums_x[k] > r.prefix_sums_y[k] + tol) r.x_majorized_by_y = false;
    if (r.prefix_sums_y[k] > r.prefix_sums_x[k] + tol) r.y_majorized_by_x = false;
  }
  return r;
}

bool locc_convertible(const StateVector& psi, const StateVector& phi, int cut) {
  if (psi.dims() != phi.dims()) throw Error(ErrorKind::kDimensionMismatch, "states have different factorizations");
  return majorizes(schmidt_weights(psi, cut), schmidt_weights(phi, cut), 1e-10).x_majorized_by_y;
}

double entanglement_entropy(const StateVector& psi, int cut) {
  return shannon(schmidt_weights(psi, cut));
}

double concurrence_pure(const StateVector& psi, int cut) {
  double p = 0.0;
  for (double w : schmidt_weights(psi, cut)) p += w * w;
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double concurrence_spin_flip(const StateVector& psi) {
  require_two_qubits(psi.dims());
  const Vector& a = psi.amplitudes();
  return std::abs((a.transpose() * yy() * a)(0, 0));
}

double concurrence_determinant(const StateVector& psi) {
  require_two_qubits(psi.dims());
  const Vector& a = psi.amplitudes();
  return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

double concurrence_mixed_2q(const DensityMatrix& rho) {
  require_two_qubits(rho.dims());
  const Matrix s = matrix_sqrt_psd(rho.matrix(), 1e-8);
  const Matrix flip = yy();
  // Eigenvalues of R are the singular values of sqrt(rho) sqrt(rho~).
  Eigen::JacobiSVD<Matrix> svd(s * flip * s.conjugate() * flip);
  const RealVector l = svd.singularValues();
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double eof_from_concurrence(double c) {
  if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) throw Error(ErrorKind::kInvalidArgument, "concurrence must lie in [0, 1]");
  const double cc = std::clamp(c, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - cc * cc)) / 2.0);
}

double entanglement_of_formation_2q(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence_mixed_2q(rho));
}

Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem) {
  require_square(m, "operator");
  const int n = static_cast<int>(dims.size());
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "partial transpose needs a bipartition");
  if (product(dims) != m.rows()) throw Error(ErrorKind::kDimensionMismatch, "dims do not match operator size");
  if (subsystem < 0 || subsystem >= n) throw Error(ErrorKind::kDimensionMismatch, "subsystem index out of range");
  std::int64_t stride = 1;
  for (int k = n - 1; k > subsystem; --k) stride *= dims[k];
  const int ds = dims[subsystem];
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::int64_t dr = (r / stride) % ds, dc = (c / stride) % ds;
      const Eigen::Index r2 = r + (dc - dr) * stride, c2 = c + (dr - dc) * stride;
      out(r2, c2) = m(r, c);
    }
  return out;
}

bool is_ppt(const DensityMatrix& rho, int subsystem, double tol) {
  const Matrix pt = partial_transpose(rho.matrix(), rho.dims(), subsystem);
  return eigenvalues_hermitian(pt, 1e-8).minCoeff() >= -tol;
}

double negativity(const DensityMatrix& rho, int subsystem) {
  const Matrix pt = partial_transpose(rho.matrix(), rho.dims(), subsystem);
  return std::max(0.0, (eigenvalues_hermitian(pt, 1e-8).cwiseAbs().sum() - 1.0) / 2.0);
}

StateVector maximally_entangled(int d) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "maximally entangled state needs d >= 2");
  Vector v = Vector::Zero(d * d);
  for (int j = 0; j < d; ++j) v(j * d + j) = 1.0 / std::sqrt(static_cast<double>(d));
  return StateVector({d, d}, v);
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "Werner parameter must lie in [0, 1]");
  const Matrix m = p * bell_phi_plus().projector() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
  return DensityMatrix({2, 2}, m);
}

DensityMatrix locc_one_way(const DensityMatrix& rho, const std::vector<Matrix>& alice,
                           const std::vector<Matrix>& bob) {
  if (rho.dims().size() != 2) throw Error(ErrorKind::kInvalidArgument, "expected a bipartite state");
  if (alice.empty() || alice.size() != bob.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "each outcome of Alice needs one operation for Bob");
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (std::size_t j = 0; j < alice.size(); ++j) {
    const Matrix k = kron(alice[j], bob[j]);
    if (k.rows() != rho.dim()) throw Error(ErrorKind::kDimensionMismatch, "local operations do not match the state");
    out += k * rho.matrix() * k.adjoint();
  }
  return DensityMatrix(rho.dims(), out, 1e-8);
}

double concurrence_roof_upper_bound(const DensityMatrix& rho, int trials, std::uint64_t seed) {
  if (rho.dims().size() != 2) throw Error(ErrorKind::kInvalidArgument, "expected a bipartite state");
  const HermitianEig e = hermitian_eig(rho.matrix(), 1e-8);
  std::vector<Vector> w;
  for (Eigen::Index k = 0; k < e.eigenvalues.size(); ++k)
    if (e.eigenvalues(k) > 1e-12) w.push_back(std::sqrt(e.eigenvalues(k)) * e.eigenvectors.col(k));
  const int r = static_cast<int>(w.size());
  auto average = [&](const Matrix& u) {
    double c = 0.0;
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
      Vector psi = Vector::Zero(rho.dim());
      for (int i = 0; i < r; ++i) psi += u(j, i) * w[i];
      const double p = psi.squaredNorm();
      if (p > 1e-15) c += p * concurrence_pure(StateVector::normalized(rho.dims(), psi));
    }
    return c;
  };
  double best = average(Matrix::Identity(r, r));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int k = r + static_cast<int>(rng() % 3);
    const Matrix u = random_unitary(k, rng()).leftCols(r);
    best = std::min(best, average(u));
  }
  return best;
}

SchurConcavityReport schur_concavity_check(const std::function<double(const std::vector<double>&)>& f,
                                           int dim, int trials, std::uint64_t seed) {
  if (dim < 2 || trials < 1) throw Error(ErrorKind::kInvalidArgument, "need dim >= 2 and trials >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> ex(1.0);
  constexpr double h = 1e-6;
  SchurConcavityReport report;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x(dim);
    double total = 0.0;
    for (double& v : x) total += (v = ex(rng) + 1e-2);
    for (double& v : x) v /= total;

    std::vector<double> perm = x;
    std::shuffle(perm.begin(), perm.end(), rng);
    const double fx = f(x);
    if (std::abs(f(perm) - fx) > 1e-9 * std::max(1.0, std::abs(fx))) report.symmetric = false;

    const int i = static_cast<int>(rng() % dim);
    int j = static_cast<int>(rng() % (dim - 1));
    if (j >= i) ++j;
    // Directional derivative along e_i - e_j stays on the simplex.
    std::vector<double> up = x, down = x;
    up[i] += h;
    up[j] -= h;
    down[i] -= h;
    down[j] += h;
    const double diff = (f(up) - f(down)) / (2 * h);
    if ((x[i] - x[j]) * diff > 1e-6) report.derivative_condition = false;
  }
  return report;
}

}  // namespace qitk
