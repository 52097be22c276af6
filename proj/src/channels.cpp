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

#include "qitk/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qitk/gates.hpp"

namespace qitk {

namespace {

Matrix completeness_sum(const std::vector<Matrix>& elements) {
  const Eigen::Index d = elements.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : elements) sum += e.adjoint() * e;
  return sum;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> elements, ChannelKind kind, double tol)
    : elements_(std::move(elements)), kind_(kind) {
  if (elements_.empty()) throw Error(ErrorKind::kInvalidArgument, "channel has no elements");
  const Eigen::Index d = elements_.front().rows();
  for (const Matrix& e : elements_) {
    require_square(e, "operation element");
    if (e.rows() != d) throw Error(ErrorKind::kDimensionMismatch, "operation elements differ in size");
  }
  const Matrix sum = completeness_sum(elements_);
  const Matrix gap = Matrix::Identity(d, d) - sum;
  if (kind_ == ChannelKind::kTracePreserving) {
    const double r = max_abs(gap);
    if (r > tol) {
      std::ostringstream msg;
      msg << "sum of E^dag E differs from the identity by " << r;
      throw Error(ErrorKind::kNotTracePreserving, msg.str());
    }
  } else if (!is_psd(gap, tol).ok) {
    throw Error(ErrorKind::kNotTracePreserving, "sum of E^dag E exceeds the identity");
  }
}

double KrausChannel::completeness_residual() const {
  const Matrix sum = completeness_sum(elements_);
  return max_abs(sum - Matrix::Identity(sum.rows(), sum.cols()));
}

Matrix apply(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.dim() || rho.cols() != ch.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "operator does not match channel dimension");
  }
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& e : ch.elements()) out += e * rho * e.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.kind() != ChannelKind::kTracePreserving) {
    throw Error(ErrorKind::kNotTracePreserving,
                "sub-normalized channel output is not a state; use apply_subnormalized");
  }
  return DensityMatrix(rho.dims(), qitk::apply(ch, rho.matrix()), 1e-8);
}

SubNormalizedOutput apply_subnormalized(const KrausChannel& ch, const DensityMatrix& rho) {
  Matrix out = qitk::apply(ch, rho.matrix());
  return {out, out.trace().real()};
}

DensityMatrix apply_on(const KrausChannel& ch, const DensityMatrix& rho, int subsystem) {
  const Dims& dims = rho.dims();
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "subsystem index out of range");
  }
  if (dims[subsystem] != ch.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "channel does not match subsystem dimension");
  }
  const auto left = product(Dims(dims.begin(), dims.begin() + subsystem));
  const auto right = product(Dims(dims.begin() + subsystem + 1, dims.end()));
  const Matrix il = Matrix::Identity(left, left), ir = Matrix::Identity(right, right);
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& e : ch.elements()) {
    const Matrix full = kron(kron(il, e), ir);
    out += full * rho.matrix() * full.adjoint();
  }
  return DensityMatrix(dims, out, 1e-8);
}

const std::vector<std::string>& named_channel_names() {
  static const std::vector<std::string> names{"bit_flip",      "phase_flip",        "bit_phase_flip",
                                              "depolarizing", "amplitude_damping", "phase_damping"};
  return names;
}

KrausChannel named_channel(const std::string& name, double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "channel parameter must lie in [0, 1]");
  }
  const Matrix id = Matrix::Identity(2, 2);
  auto diag = [](cplx a, cplx b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
  };
  std::vector<Matrix> e;
  if (name == "bit_flip") {
    e = {std::sqrt(1 - p) * id, std::sqrt(p) * pauli(1)};
  } else if (name == "phase_flip") {
    e = {std::sqrt(1 - p) * id, std::sqrt(p) * pauli(3)};
  } else if (name == "bit_phase_flip") {
    e = {std::sqrt(1 - p) * id, std::sqrt(p) * pauli(2)};
  } else if (name == "depolarizing") {
    e = {std::sqrt(1 - 0.75 * p) * id, std::sqrt(p) / 2 * pauli(1), std::sqrt(p) / 2 * pauli(2),
         std::sqrt(p) / 2 * pauli(3)};
  } else if (name == "amplitude_damping") {
    Matrix e1 = Matrix::Zero(2, 2);
    e1(0, 1) = std::sqrt(p);
    e = {diag(1, std::sqrt(1 - p)), e1};
  } else if (name == "phase_damping") {
    e = {diag(1, std::sqrt(1 - p)), diag(0, std::sqrt(p))};
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown channel: " + name);
  }
  return KrausChannel(std::move(e), ChannelKind::kTracePreserving, 1e-12);
}

KrausChannel unitary_channel(const Matrix& u) {
  require_square(u, "unitary");
  if (!is_unitary(u).ok) throw Error(ErrorKind::kNotUnitary, "unitary channel needs a unitary");
  return KrausChannel({u}, ChannelKind::kTracePreserving);
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.dim() != first.dim()) throw Error(ErrorKind::kDimensionMismatch, "channel dimensions differ");
  std::vector<Matrix> e;
  for (const Matrix& a : second.elements())
    for (const Matrix& b : first.elements()) e.push_back(a * b);
  const bool tp = second.kind() == ChannelKind::kTracePreserving &&
                  first.kind() == ChannelKind::kTracePreserving;
  return KrausChannel(std::move(e), tp ? ChannelKind::kTracePreserving : ChannelKind::kSubNormalized,
                      1e-8);
}

double damping_parameter(double t, double time_constant) {
  if (!(time_constant > 0.0) || !(t >= 0.0) || !std::isfinite(t) || !std::isfinite(time_constant)) {
    throw Error(ErrorKind::kInvalidArgument, "need t >= 0 and a positive time constant");
  }
  return 1.0 - std::exp(-t / time_constant);
}

namespace {

void validate_model(const EnvironmentModel& m, double tol) {
  if (m.system_dim < 1 || m.env_dim < 1) throw Error(ErrorKind::kDimensionMismatch, "dimensions must be positive");
  require_square(m.joint_unitary, "joint unitary");
  if (m.joint_unitary.rows() != static_cast<Eigen::Index>(m.system_dim) * m.env_dim) {
    throw Error(ErrorKind::kDimensionMismatch, "joint unitary does not match system x environment");
  }
  if (m.env_init.dim() != m.env_dim) {
    throw Error(ErrorKind::kDimensionMismatch, "environment state has the wrong dimension");
  }
  if (!is_unitary(m.joint_unitary, tol).ok) {
    throw Error(ErrorKind::kNotUnitary, "joint evolution is not unitary");
  }
}

}  // namespace

KrausChannel kraus_from_environment(const EnvironmentModel& m, double tol) {
  validate_model(m, tol);
  const int d = m.system_dim, me = m.env_dim;
  const Vector& c = m.env_init.amplitudes();
  std::vector<Matrix> elements;
  // E_k = <e_k| U |e_0>, with |e_0> the initial environment state.
  for (int k = 0; k < me; ++k) {
    Matrix e = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int x = 0; x < me; ++x) e(i, j) += m.joint_unitary(i * me + k, j * me + x) * c(x);
    if (max_abs(e) > 1e-14) elements.push_back(std::move(e));
  }
  return KrausChannel(std::move(elements), ChannelKind::kTracePreserving, std::max(tol, 1e-8));
}

DensityMatrix apply_environment(const EnvironmentModel& m, const DensityMatrix& rho) {
  validate_model(m, kDefaultTol);
  if (rho.dim() != m.system_dim) throw Error(ErrorKind::kDimensionMismatch, "state does not match the system");
  const Matrix joint = kron(rho.matrix(), m.env_init.projector());
  const Matrix out = m.joint_unitary * joint * m.joint_unitary.adjoint();
  return DensityMatrix(rho.dims(), partial_trace(out, {m.system_dim, m.env_dim}, {0}), 1e-8);
}

EnvironmentModel stinespring(const KrausChannel& ch, double tol) {
  if (ch.kind() != ChannelKind::kTracePreserving || ch.completeness_residual() > tol) {
    throw Error(ErrorKind::kNotTracePreserving, "dilation needs a trace-preserving channel");
  }
  const int d = ch.dim();
  const int m = std::max<int>(2, static_cast<int>(ch.elements().size()));
  // V|j> = sum_k E_k|j> (x) |k>.
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(d) * m, d);
  for (int k = 0; k < static_cast<int>(ch.elements().size()); ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v(i * m + k, j) = ch.elements()[k](i, j);
  const Matrix full = complete_to_unitary(v, std::max(tol, 1e-8));
  EnvironmentModel out;
  out.system_dim = d;
  out.env_dim = m;
  out.joint_unitary = Matrix(d * m, d * m);
  int spare = d;
  for (int col = 0; col < d * m; ++col) {
    if (col % m == 0) out.joint_unitary.col(col) = full.col(col / m);
    else out.joint_unitary.col(col) = full.col(spare++);
  }
  out.env_init = StateVector::basis({m}, 0);
  return out;
}

Matrix choi(const KrausChannel& ch) {
  const int d = ch.dim();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Matrix ejk = Matrix::Zero(d, d);
      ejk(j, k) = 1.0;
      out.block(j * d, k * d, d, d) = qitk::apply(ch, ejk);
    }
  return out;
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kDimensionMismatch, "channel dimensions differ");
  return max_abs(choi(a) - choi(b));
}

bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol) {
  return a.dim() == b.dim() && choi_distance(a, b) < tol;
}

KrausChannel canonical_kraus(const KrausChannel& ch, double tol) {
  const int d = ch.dim();
  const HermitianEig e = hermitian_eig(choi(ch), 1e-8);
  std::vector<Matrix> elements;
  for (Eigen::Index n = e.eigenvalues.size() - 1; n >= 0; --n) {
    const double lam = e.eigenvalues(n);
    if (lam <= tol) continue;
    Matrix k(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) k(i, j) = std::sqrt(lam) * e.eigenvectors(j * d + i, n);
    elements.push_back(std::move(k));
  }
  if (elements.empty()) elements.push_back(Matrix::Zero(d, d));
  return KrausChannel(std::move(elements), ch.kind(), 1e-8);
}

std::optional<Matrix> find_kraus_unitary(const KrausChannel& a, const KrausChannel& b, double tol) {
  if (!channels_equal(a, b, tol)) return std::nullopt;
  const int d = a.dim();
  const int m = static_cast<int>(std::max(a.elements().size(), b.elements().size()));
  // Columns are vectorized elements; zero columns pad the shorter list.
  Matrix ea = Matrix::Zero(d * d, m), fb = Matrix::Zero(d * d, m);
  for (std::size_t k = 0; k < a.elements().size(); ++k)
    ea.col(static_cast<Eigen::Index>(k)) = a.elements()[k].reshaped();
  for (std::size_t k = 0; k < b.elements().size(); ++k)
    fb.col(static_cast<Eigen::Index>(k)) = b.elements()[k].reshaped();
  // E_j = sum_k U_jk F_k  <=>  ea = fb U^T; Procrustes gives the unitary W = U^T.
  const SvdResult s = svd(fb.adjoint() * ea);
  const Matrix w = s.u * s.v;
  if (max_abs(ea - fb * w) > std::max(tol, 1e-8)) return std::nullopt;
  return Matrix(w.transpose());
}

BlochVector BlochAffineMap::operator()(const BlochVector& v) const {
  BlochVector out;
  for (int i = 0; i < 3; ++i) {
    out.v[i] = offset[i];
    for (int j = 0; j < 3; ++j) out.v[i] += linear[i][j] * v.v[j];
  }
  return out;
}

BlochAffineMap bloch_map(const KrausChannel& ch) {
  if (ch.dim() != 2) throw Error(ErrorKind::kDimensionMismatch, "Bloch map needs a qubit channel");
  BlochAffineMap m;
  const Matrix img_id = qitk::apply(ch, pauli(0));
  for (int i = 0; i < 3; ++i) {
    m.offset[i] = 0.5 * (pauli(i + 1) * img_id).trace().real();
    for (int j = 0; j < 3; ++j)
      m.linear[i][j] = 0.5 * (pauli(i + 1) * qitk::apply(ch, pauli(j + 1))).trace().real();
  }
  return m;
}

}  // namespace qitk
