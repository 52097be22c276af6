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

#include "qitk/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qitk {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void require_same_length(const ProbDist& p, const ProbDist& q) {
  if (p.probs.size() != q.probs.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "distributions have different lengths");
  }
}

void require_same_dims(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kDimensionMismatch, "states have different dimensions");
}

}  // namespace

ProbDist ProbDist::make(std::vector<double> p, double tol) {
  if (p.empty()) throw Error(ErrorKind::kInvalidArgument, "empty distribution");
  double total = 0.0;
  for (double& x : p) {
    if (!std::isfinite(x) || x < -tol) throw Error(ErrorKind::kInvalidArgument, "negative probability");
    x = std::max(x, 0.0);
    total += x;
  }
  if (std::abs(total - 1.0) > tol) throw Error(ErrorKind::kInvalidArgument, "probabilities do not sum to one");
  return {std::move(p)};
}

JointDist JointDist::make(RealMatrix table, double tol) {
  if (table.size() == 0) throw Error(ErrorKind::kInvalidArgument, "empty joint table");
  if (!table.allFinite() || table.minCoeff() < -tol) {
    throw Error(ErrorKind::kInvalidArgument, "joint table has negative entries");
  }
  if (std::abs(table.sum() - 1.0) > tol) throw Error(ErrorKind::kInvalidArgument, "joint table does not sum to one");
  return {table.cwiseMax(0.0)};
}

ProbDist JointDist::marginal_x() const {
  const RealVector m = table.rowwise().sum();
  return {std::vector<double>(m.data(), m.data() + m.size())};
}

ProbDist JointDist::marginal_y() const {
  const RealVector m = table.colwise().sum().transpose();
  return {std::vector<double>(m.data(), m.data() + m.size())};
}

double trace_distance_c(const ProbDist& p, const ProbDist& q) {
  require_same_length(p, q);
  double d = 0.0;
  for (std::size_t k = 0; k < p.probs.size(); ++k) d += std::abs(p.probs[k] - q.probs[k]);
  return d / 2;
}

double fidelity_c(const ProbDist& p, const ProbDist& q) {
  require_same_length(p, q);
  double f = 0.0;
  for (std::size_t k = 0; k < p.probs.size(); ++k) f += std::sqrt(p.probs[k] * q.probs[k]);
  return f;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h += plogp(x);
  return h;
}

double shannon(const ProbDist& p) { return shannon(p.probs); }

double relative_entropy_c(const ProbDist& p, const ProbDist& q) {
  require_same_length(p, q);
  double h = 0.0;
  for (std::size_t k = 0; k < p.probs.size(); ++k) {
    if (p.probs[k] <= 0.0) continue;
    if (q.probs[k] <= 0.0) return std::numeric_limits<double>::infinity();
    h += p.probs[k] * std::log2(p.probs[k] / q.probs[k]);
  }
  return h;
}

double joint_entropy(const JointDist& j) {
  double h = 0.0;
  for (Eigen::Index r = 0; r < j.table.rows(); ++r)
    for (Eigen::Index c = 0; c < j.table.cols(); ++c) h += plogp(j.table(r, c));
  return h;
}

double conditional_entropy(const JointDist& j) { return joint_entropy(j) - shannon(j.marginal_y()); }

double mutual_information(const JointDist& j) {
  return shannon(j.marginal_x()) + shannon(j.marginal_y()) - joint_entropy(j);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "binary entropy needs p in [0, 1]");
  return plogp(p) + plogp(1.0 - p);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma);
  const RealVector lam = eigenvalues_hermitian(rho.matrix() - sigma.matrix());
  return lam.cwiseAbs().sum() / 2;
}

namespace {

// Square root that drops eigenvalues at rounding level; their roots (~1e-8)
// would otherwise dominate the error for pure inputs.
Matrix density_sqrt(const Matrix& m) {
  const HermitianEig e = hermitian_eig(m, 1e-8);
  RealVector r(e.eigenvalues.size());
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    const double x = e.eigenvalues(k);
    r(k) = x > 64 * std::numeric_limits<double>::epsilon() ? std::sqrt(x) : 0.0;
  }
  return e.eigenvectors * r.cast<cplx>().asDiagonal() * e.eigenvectors.adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma);
  // Tr|sqrt(sigma) sqrt(rho)| as a sum of singular values.
  const Matrix x = density_sqrt(sigma.matrix()) * density_sqrt(rho.matrix());
  return std::min(1.0, trace_norm(x));
}

FuchsVanDeGraaf fuchs_van_de_graaf(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = fidelity(rho, sigma);
  return {1.0 - f, trace_distance(rho, sigma), std::sqrt(std::max(0.0, 1.0 - f * f))};
}

Povm optimal_distinguishing_measurement(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma);
  const HermitianEig e = hermitian_eig(rho.matrix() - sigma.matrix(), 1e-8);
  const int d = rho.dim();
  Matrix p = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    if (e.eigenvalues(k) > 0.0) p += e.eigenvectors.col(k) * e.eigenvectors.col(k).adjoint();
  return {{p, Matrix::Identity(d, d) - p}};
}

namespace {

double pure_gate_fidelity(const Matrix& u, const KrausChannel& ch, const Vector& psi) {
  const Vector target = u * psi;
  const Matrix out = qitk::apply(ch, Matrix(psi * psi.adjoint()));
  return std::sqrt(std::max(0.0, target.dot(out * target).real()));
}

}  // namespace

GateFidelityResult gate_fidelity(const Matrix& u, const KrausChannel& ch, std::uint64_t seed, int samples) {
  require_square(u, "target unitary");
  if (u.rows() != ch.dim()) throw Error(ErrorKind::kDimensionMismatch, "unitary and channel dimensions differ");
  if (!is_unitary(u).ok) throw Error(ErrorKind::kNotUnitary, "target is not unitary");
  if (samples < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one sample");
  const int d = ch.dim();
  std::mt19937_64 rng(seed);
  Vector best = Vector::Zero(d);
  double best_f = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vector& v) {
    const double f = pure_gate_fidelity(u, ch, v);
    if (f < best_f) {
      best_f = f;
      best = v;
    }
  };
  // Basis states are cheap candidates that often sit at the optimum.
  for (int k = 0; k < d; ++k) consider(StateVector::basis({d}, k).amplitudes());
  for (int s = 0; s < samples; ++s) consider(random_pure({d}, rng()).amplitudes());
  // Coordinate descent on the sphere with a shrinking step.
  for (double step = 0.1; step > 1e-7; step /= 2) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int k = 0; k < 2 * d; ++k) {
        for (double sign : {1.0, -1.0}) {
          Vector v = best;
          v(k / 2) += (k % 2 == 0 ? cplx(sign * step, 0) : cplx(0, sign * step));
          v.normalize();
          const double f = pure_gate_fidelity(u, ch, v);
          if (f < best_f - 1e-15) {
            best_f = f;
            best = v;
            improved = true;
          }
        }
      }
    }
  }
  return {best_f, StateVector::normalized({d}, best), samples};
}

std::pair<StateVector, StateVector> uhlmann_purifications(const DensityMatrix& rho,
                                                          const DensityMatrix& sigma) {
  require_same_dims(rho, sigma);
  const int d = rho.dim();
  const Matrix a = matrix_sqrt_psd(rho.matrix(), 1e-8);
  const Matrix b = matrix_sqrt_psd(sigma.matrix(), 1e-8);
  // |psi> = (A (x) 1)|m>, |phi> = (B (x) W)|m>, overlap Tr(A^dag B W^T).
  const Matrix w_t = polar(Matrix(a * b)).unitary_part.adjoint();
  const Matrix phi = b * w_t;
  Vector vpsi(d * d), vphi(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      vpsi(i * d + j) = a(i, j);
      vphi(i * d + j) = phi(i, j);
    }
  Dims dims = rho.dims();
  dims.push_back(d);
  return {StateVector::normalized(dims, vpsi), StateVector::normalized(dims, vphi)};
}

double von_neumann(const DensityMatrix& rho) {
  const RealVector lam = eigenvalues_hermitian(rho.matrix(), 1e-8);
  double s = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) s += plogp(std::max(lam(k), 0.0));
  return s;
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma);
  const HermitianEig e = hermitian_eig(sigma.matrix(), 1e-8);
  double cross = 0.0;  // -Tr(rho log sigma)
  for (Eigen::Index k = 0; k < e.eigenvalues.size(); ++k) {
    const Vector v = e.eigenvectors.col(k);
    const double weight = v.dot(rho.matrix() * v).real();
    if (e.eigenvalues(k) < kSupportCutoff) {
      if (weight > kSupportCutoff) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross -= weight * std::log2(e.eigenvalues(k));
  }
  return std::max(0.0, cross - von_neumann(rho));
}

double subsystem_entropy(const DensityMatrix& rho, const std::vector<int>& keep) {
  return von_neumann(reduce(rho, keep));
}

BipartiteEntropies bipartite_entropies(const DensityMatrix& rho, int cut) {
  const int n = static_cast<int>(rho.dims().size());
  if (cut < 1 || cut >= n) throw Error(ErrorKind::kInvalidArgument, "cut must split the factors in two");
  std::vector<int> a, b;
  for (int k = 0; k < n; ++k) (k < cut ? a : b).push_back(k);
  BipartiteEntropies out;
  out.s_a = subsystem_entropy(rho, a);
  out.s_b = subsystem_entropy(rho, b);
  out.s_ab = von_neumann(rho);
  out.conditional = out.s_ab - out.s_b;
  out.mutual = out.s_a + out.s_b - out.s_ab;
  return out;
}

double holevo_chi(const Ensemble& e) {
  double avg = 0.0;
  for (const auto& [p, rho] : e.entries) avg += p * von_neumann(rho);
  return std::max(0.0, von_neumann(density_from_ensemble(e)) - avg);
}

JointDist ensemble_measurement_joint(const Ensemble& e, const Povm& p) {
  RealMatrix table(static_cast<Eigen::Index>(e.entries.size()), static_cast<Eigen::Index>(p.elements.size()));
  for (std::size_t x = 0; x < e.entries.size(); ++x) {
    const std::vector<double> py = povm_probabilities(e.entries[x].second, p);
    for (std::size_t y = 0; y < py.size(); ++y)
      table(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = e.entries[x].first * py[y];
  }
  return JointDist::make(table, 1e-8);
}

}  // namespace qitk
