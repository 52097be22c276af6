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

#include "qitk/states.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace qitk {

namespace {

void validate_dims(const Dims& dims, std::int64_t size) {
  if (dims.empty()) throw Error(ErrorKind::kDimensionMismatch, "empty dimension list");
  for (int d : dims) {
    if (d < 1) throw Error(ErrorKind::kDimensionMismatch, "subsystem dimension < 1");
  }
  if (product(dims) != size) {
    std::ostringstream msg;
    msg << "dims multiply to " << product(dims) << " but data has size " << size;
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
}

Vector gaussian_vector(std::int64_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (std::int64_t k = 0; k < n; ++k) {
    const double re = g(rng);
    const double im = g(rng);
    v(k) = cplx(re, im);
  }
  return v;
}

}  // namespace

StateVector::StateVector(Dims dims, Vector amplitudes, double tol)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  validate_dims(dims_, amps_.size());
  if (!amps_.allFinite()) throw Error(ErrorKind::kInvalidArgument, "non-finite amplitude");
  const double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "state is not normalized (norm^2 = " << n2 << ")";
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
}

StateVector StateVector::normalized(Dims dims, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  return StateVector(std::move(dims), amplitudes / n, 1e-12);
}

StateVector StateVector::basis(Dims dims, std::int64_t index) {
  const std::int64_t d = product(dims);
  if (index < 0 || index >= d) throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  Vector v = Vector::Zero(d);
  v(index) = 1.0;
  return StateVector(std::move(dims), v);
}

DensityMatrix::DensityMatrix(Dims dims, Matrix m, double tol)
    : dims_(std::move(dims)), m_(std::move(m)) {
  require_square(m_, "density matrix");
  validate_dims(dims_, m_.rows());
  const Check h = is_hermitian(m_, tol);
  if (!h.ok) throw Error(ErrorKind::kNotHermitian, "density matrix is not Hermitian");
  const Check p = is_psd(m_, tol);
  if (!p.ok) throw Error(ErrorKind::kNotPositive, "density matrix is not positive semidefinite");
  if (std::abs(m_.trace() - cplx(1.0)) > tol) {
    throw Error(ErrorKind::kNotTracePreserving, "density matrix trace is not one");
  }
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

DensityMatrix::DensityMatrix(const StateVector& psi)
    : dims_(psi.dims()), m_(psi.projector()) {}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const std::int64_t d = product(dims);
  return DensityMatrix(std::move(dims), Matrix::Identity(d, d) / static_cast<double>(d));
}

Ensemble Ensemble::make(std::vector<std::pair<double, DensityMatrix>> entries, double tol) {
  if (entries.empty()) throw Error(ErrorKind::kInvalidArgument, "empty ensemble");
  double total = 0.0;
  for (const auto& [p, rho] : entries) {
    if (!(p >= -tol) || !std::isfinite(p)) {
      throw Error(ErrorKind::kInvalidArgument, "ensemble probability is negative");
    }
    if (rho.dims() != entries.front().second.dims()) {
      throw Error(ErrorKind::kDimensionMismatch, "ensemble members have different dims");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw Error(ErrorKind::kInvalidArgument, "ensemble probabilities do not sum to one");
  }
  Ensemble e;
  e.entries = std::move(entries);
  return e;
}

Ensemble Ensemble::from_pure(const std::vector<std::pair<double, StateVector>>& entries,
                             double tol) {
  std::vector<std::pair<double, DensityMatrix>> mixed;
  mixed.reserve(entries.size());
  for (const auto& [p, psi] : entries) mixed.emplace_back(p, DensityMatrix(psi));
  return make(std::move(mixed), tol);
}

double BlochVector::norm() const {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

DensityMatrix density_from_ensemble(const Ensemble& e) {
  if (e.entries.empty()) throw Error(ErrorKind::kInvalidArgument, "empty ensemble");
  const Dims& dims = e.entries.front().second.dims();
  const int d = e.entries.front().second.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& [p, rho] : e.entries) {
    if (rho.dims() != dims) throw Error(ErrorKind::kDimensionMismatch, "ensemble dims differ");
    sum += p * rho.matrix();
  }
  return DensityMatrix(dims, sum);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

bool is_pure(const DensityMatrix& rho, double tol) { return purity(rho) > 1.0 - tol; }

BlochVector bloch_from_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorKind::kDimensionMismatch, "Bloch vector needs a qubit");
  const Matrix& m = rho.matrix();
  BlochVector b;
  b.v[0] = 2.0 * m(0, 1).real();
  b.v[1] = -2.0 * m(0, 1).imag();
  b.v[2] = (m(0, 0) - m(1, 1)).real();
  return b;
}

DensityMatrix qubit_from_bloch(const BlochVector& b, double tol) {
  for (double x : b.v) {
    if (!std::isfinite(x)) throw Error(ErrorKind::kInvalidArgument, "non-finite Bloch component");
  }
  if (b.norm() > 1.0 + tol) {
    throw Error(ErrorKind::kInvalidArgument, "Bloch vector lies outside the unit ball");
  }
  Matrix m(2, 2);
  m << 1.0 + b.v[2], cplx(b.v[0], -b.v[1]), cplx(b.v[0], b.v[1]), 1.0 - b.v[2];
  m *= 0.5;
  // A vector slightly outside the ball still yields a valid state after clamping.
  return DensityMatrix({2}, m, std::max(tol, 2.0 * (b.norm() - 1.0) + kDefaultTol));
}

SchmidtDecomposition schmidt(const StateVector& psi, int cut) {
  const Dims& dims = psi.dims();
  const int n = static_cast<int>(dims.size());
  if (cut < 1 || cut >= n) {
    throw Error(ErrorKind::kInvalidArgument, "Schmidt cut must split the factors into two parts");
  }
  const std::int64_t da = product(Dims(dims.begin(), dims.begin() + cut));
  const std::int64_t db = product(Dims(dims.begin() + cut, dims.end()));
  // Coefficient matrix c_{j,k}, row index on A.
  Matrix c(da, db);
  for (std::int64_t j = 0; j < da; ++j)
    for (std::int64_t k = 0; k < db; ++k) c(j, k) = psi.amplitudes()(j * db + k);
  Eigen::JacobiSVD<Matrix> solver(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = solver.singularValues();
  int r = 0;
  while (r < s.size() && s(r) > kSchmidtCutoff) ++r;
  SchmidtDecomposition out;
  out.coefficients = s.head(r);
  out.left_basis = solver.matrixU().leftCols(r);
  // c = U S W^dag, so |psi> = sum s_j |u_j> (x) conj(w_j).
  out.right_basis = solver.matrixV().leftCols(r).conjugate();
  return out;
}

StateVector purify(const DensityMatrix& rho) {
  const HermitianEig e = hermitian_eig(rho.matrix());
  const int d = rho.dim();
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int j = 0; j < d; ++j) {
    // Eigenvalues within rounding of zero would otherwise leave sqrt-sized
    // spurious Schmidt terms.
    const double p = e.eigenvalues(j);
    if (p <= 64 * std::numeric_limits<double>::epsilon()) continue;
    for (int i = 0; i < d; ++i) psi(static_cast<Eigen::Index>(i) * d + j) += std::sqrt(p) * e.eigenvectors(i, j);
  }
  Dims dims = rho.dims();
  dims.push_back(d);
  return StateVector::normalized(dims, psi);
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep) {
  Dims kept;
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(rho.dims().size())) {
      throw Error(ErrorKind::kDimensionMismatch, "subsystem index out of range");
    }
    kept.push_back(rho.dims()[k]);
  }
  if (kept.empty()) throw Error(ErrorKind::kInvalidArgument, "nothing kept in reduction");
  return DensityMatrix(kept, partial_trace(rho.matrix(), rho.dims(), keep));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(dims, kron(a.matrix(), b.matrix()));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return StateVector(dims, kron(a.amplitudes(), b.amplitudes()));
}

double overlap_abs(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kDimensionMismatch, "state sizes differ");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  return a.dim() == b.dim() && std::abs(overlap_abs(a, b) - 1.0) < tol;
}

StateVector random_pure(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return StateVector::normalized(dims, gaussian_vector(product(dims), rng));
}

DensityMatrix random_density(const Dims& dims, std::uint64_t seed) {
  const std::int64_t d = product(dims);
  Dims doubled = dims;
  doubled.push_back(static_cast<int>(d));
  const StateVector psi = random_pure(doubled, seed);
  const Matrix rho = partial_trace(psi.projector(), {static_cast<int>(d), static_cast<int>(d)}, {0});
  return DensityMatrix(dims, rho);
}

Matrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "unitary dimension < 1");
  std::mt19937_64 rng(seed);
  Matrix z(d, d);
  for (int c = 0; c < d; ++c) z.col(c) = gaussian_vector(d, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (int k = 0; k < d; ++k) {
    const cplx rk = r(k, k);
    if (std::abs(rk) > 0.0) q.col(k) *= rk / std::abs(rk);
  }
  return q;
}

namespace {
StateVector two_qubit(cplx a, cplx b, cplx c, cplx d) {
  Vector v(4);
  v << a, b, c, d;
  return StateVector({2, 2}, v / std::sqrt(2.0));
}
}  // namespace

StateVector bell_phi_plus() { return two_qubit(1, 0, 0, 1); }
StateVector bell_phi_minus() { return two_qubit(1, 0, 0, -1); }
StateVector bell_psi_plus() { return two_qubit(0, 1, 1, 0); }
StateVector bell_psi_minus() { return two_qubit(0, 1, -1, 0); }

}  // namespace qitk
