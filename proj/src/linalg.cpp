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

#include "qitk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qitk {

double global_tolerance() {
  static const double tol = [] {
    const char* env = std::getenv("QITK_TOL");
    if (env == nullptr) return kDefaultTol;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !std::isfinite(v) || v <= 0.0) return kDefaultTol;
    return v;
  }();
  return tol;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kNotHermitian: return "not_hermitian";
    case ErrorKind::kNotUnitary: return "not_unitary";
    case ErrorKind::kNotPositive: return "not_positive";
    case ErrorKind::kNotTracePreserving: return "not_trace_preserving";
    case ErrorKind::kPromiseViolated: return "promise_violated";
    case ErrorKind::kExhausted: return "exhausted";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

Matrix make_matrix(int rows, int cols, const std::vector<cplx>& row_major) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix shape must be at least 1x1");
  }
  if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != row_major.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "entry count does not match shape");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = row_major[static_cast<std::size_t>(r) * cols + c];
  require_finite(m);
  return m;
}

void require_finite(const Matrix& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(what) + " is empty");
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " has non-finite entries");
  }
}

void require_square(const Matrix& m, const char* what) {
  require_finite(m, what);
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(what) + " is not square");
  }
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::int64_t product(const std::vector<int>& dims) {
  std::int64_t p = 1;
  for (int d : dims) p *= d;
  return p;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.rows(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(j * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(j, k) * b;
  return out;
}

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  require_square(m, "partial_trace input");
  const int n = static_cast<int>(dims.size());
  for (int d : dims) {
    if (d < 1) throw Error(ErrorKind::kDimensionMismatch, "subsystem dimension < 1");
  }
  if (product(dims) != m.rows()) {
    std::ostringstream msg;
    msg << "dims multiply to " << product(dims) << " but matrix is " << m.rows() << "x"
        << m.cols();
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n || kept[k]) {
      throw Error(ErrorKind::kDimensionMismatch, "invalid or repeated subsystem index");
    }
    kept[k] = true;
  }

  // Strides of each factor in the full index; factor 0 most significant.
  std::vector<std::int64_t> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims[k + 1];

  std::vector<int> kept_f, traced_f;
  for (int k = 0; k < n; ++k) (kept[k] ? kept_f : traced_f).push_back(k);

  auto offsets = [&](const std::vector<int>& factors) {
    std::vector<std::int64_t> out{0};
    for (int f : factors) {
      std::vector<std::int64_t> next;
      next.reserve(out.size() * dims[f]);
      for (std::int64_t base : out)
        for (int v = 0; v < dims[f]; ++v) next.push_back(base + v * stride[f]);
      out.swap(next);
    }
    return out;
  };
  const std::vector<std::int64_t> keep_off = offsets(kept_f);
  const std::vector<std::int64_t> trace_off = offsets(traced_f);

  const Eigen::Index dk = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      cplx acc = 0.0;
      for (std::int64_t t : trace_off) acc += m(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

HermitianEig hermitian_eig(const Matrix& m, double tol) {
  require_square(m, "hermitian_eig input");
  const Check h = is_hermitian(m, tol);
  if (!h.ok) {
    std::ostringstream msg;
    msg << "input is not Hermitian (residual " << h.residual << ")";
    throw Error(ErrorKind::kNotHermitian, msg.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues_hermitian(const Matrix& m, double tol) {
  require_square(m, "eigenvalue input");
  const Check h = is_hermitian(m, tol);
  if (!h.ok) throw Error(ErrorKind::kNotHermitian, "input is not Hermitian");
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

SvdResult svd(const Matrix& m) {
  require_finite(m, "svd input");
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // Eigen returns m = U S W^dag; the public contract is m = u diag(s) v.
  const Eigen::Index r = m.rows(), c = m.cols(), k = std::min(r, c);
  SvdResult out;
  out.singular_values = solver.singularValues();
  if (r == c) {
    out.u = solver.matrixU();
    out.v = solver.matrixV().adjoint();
  } else {
    // Thin layout keeps u diag(s) v well-typed for rectangular input.
    out.u = solver.matrixU().leftCols(k);
    out.v = solver.matrixV().leftCols(k).adjoint();
  }
  return out;
}

PolarResult polar(const Matrix& m) {
  require_square(m, "polar input");
  const SvdResult s = svd(m);
  const Matrix d = s.singular_values.cast<cplx>().asDiagonal();
  PolarResult out;
  out.unitary_part = s.u * s.v;
  out.positive_part_right = s.v.adjoint() * d * s.v;
  out.positive_part_left = s.u * d * s.u.adjoint();
  return out;
}

namespace {

template <typename F>
Matrix spectral_apply_psd(const Matrix& m, double tol, F f) {
  const HermitianEig e = hermitian_eig(m, tol);
  RealVector lam = e.eigenvalues;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam(k) < -tol) {
      std::ostringstream msg;
      msg << "matrix has eigenvalue " << lam(k) << " below -" << tol;
      throw Error(ErrorKind::kNotPositive, msg.str());
    }
    lam(k) = f(std::max(lam(k), 0.0));
  }
  return e.eigenvectors * lam.cast<cplx>().asDiagonal() * e.eigenvectors.adjoint();
}

}  // namespace

Matrix matrix_sqrt_psd(const Matrix& m, double tol) {
  return spectral_apply_psd(m, tol, [](double x) { return std::sqrt(x); });
}

Matrix matrix_log2_psd(const Matrix& m, double tol) {
  return spectral_apply_psd(m, tol, [tol](double x) { return x > tol ? std::log2(x) : 0.0; });
}

Matrix matrix_abs(const Matrix& m) {
  require_square(m, "matrix_abs input");
  const SvdResult s = svd(m);
  return s.v.adjoint() * s.singular_values.cast<cplx>().asDiagonal() * s.v;
}

double trace_norm(const Matrix& m) {
  require_finite(m, "trace_norm input");
  Eigen::JacobiSVD<Matrix> solver(m);
  return solver.singularValues().sum();
}

Check is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.size() == 0) return {false, INFINITY};
  const double r = max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
  return {r < tol, r};
}

Check is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.size() == 0) return {false, INFINITY};
  const double r = max_abs(m - m.adjoint());
  return {r < tol, r};
}

Check is_psd(const Matrix& m, double tol) {
  const Check h = is_hermitian(m, tol);
  if (!h.ok) return h;
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  const double neg = std::max(0.0, -solver.eigenvalues().minCoeff());
  const double r = std::max(h.residual, neg);
  return {r < tol, r};
}

Check is_projector(const Matrix& m, double tol) {
  const Check h = is_hermitian(m, tol);
  if (!h.ok) return h;
  const double r = std::max(h.residual, max_abs(m * m - m));
  return {r < tol, r};
}

Check is_density(const Matrix& m, double tol) {
  const Check p = is_psd(m, tol);
  if (!p.ok) return p;
  const double r = std::max(p.residual, std::abs(m.trace() - cplx(1.0)));
  return {r < tol, r};
}

Matrix complete_to_unitary(const Matrix& isometry, double tol) {
  require_finite(isometry, "isometry");
  const Eigen::Index d = isometry.rows(), k = isometry.cols();
  if (k > d) throw Error(ErrorKind::kDimensionMismatch, "isometry has more columns than rows");
  const double r = max_abs(isometry.adjoint() * isometry - Matrix::Identity(k, k));
  if (r > tol) throw Error(ErrorKind::kNotUnitary, "columns are not orthonormal");
  Matrix out(d, d);
  out.leftCols(k) = isometry;
  if (k == d) return out;
  // Orthogonal complement from a full QR of the isometry.
  Eigen::HouseholderQR<Matrix> qr(isometry);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  out.rightCols(d - k) = q.rightCols(d - k);
  return out;
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Align on the largest entry of b, then compare entrywise.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return max_abs(a) < tol;
  const cplx ratio = a(r, c) / b(r, c);
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  const cplx phase = ratio / std::abs(ratio);
  return max_abs(a - phase * b) < tol;
}

}  // namespace qitk
