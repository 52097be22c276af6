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

#include "qitk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <unordered_set>

namespace qitk {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix permutation_matrix(const std::vector<std::uint64_t>& perm) {
  const auto d = static_cast<Eigen::Index>(perm.size());
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(static_cast<Eigen::Index>(perm[k]), k) = 1.0;
  return m;
}

std::vector<double> parse_args(const std::string& name, std::size_t expected) {
  const auto open = name.find('(');
  const auto close = name.rfind(')');
  if (open == std::string::npos || close != name.size() - 1 || close < open) {
    throw Error(ErrorKind::kInvalidArgument, "malformed gate name: " + name);
  }
  std::vector<double> out;
  std::stringstream ss(name.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument, "bad gate parameter in " + name);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidArgument, "bad gate parameter in " + name);
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw Error(ErrorKind::kInvalidArgument, "wrong parameter count in " + name);
  }
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

int arity_of_size(Eigen::Index d) {
  int a = 0;
  while ((Eigen::Index{1} << a) < d) ++a;
  if ((Eigen::Index{1} << a) != d || a == 0) {
    throw Error(ErrorKind::kDimensionMismatch, "gate size is not a power of two >= 2");
  }
  return a;
}

}  // namespace

Matrix Gate::dense() const {
  return is_permutation() ? permutation_matrix(permutation) : matrix;
}

Gate Gate::adjoint() const {
  static const std::unordered_set<std::string> self_inverse{
      "I", "X", "Y", "Z", "H", "CNOT", "CZ", "SWAP", "TOFFOLI"};
  Gate g = *this;
  if (is_permutation()) {
    for (std::size_t k = 0; k < permutation.size(); ++k) g.permutation[permutation[k]] = k;
  } else {
    g.matrix = matrix.adjoint();
  }
  if (self_inverse.count(name)) return g;
  if (name == "T") g.name = "TDG";
  else if (name == "TDG") g.name = "T";
  else if (name == "S") g.name = "SDG";
  else if (name == "SDG") g.name = "S";
  else if (name.rfind("P(", 0) == 0) g.name = "P(" + format_double(-parse_args(name, 1)[0]) + ")";
  else if (name.rfind("Rn(", 0) == 0) {
    const auto a = parse_args(name, 4);
    g.name = "Rn(" + format_double(a[0]) + "," + format_double(a[1]) + "," + format_double(a[2]) +
             "," + format_double(-a[3]) + ")";
  } else if (name.size() > 4 && name.substr(name.size() - 4) == "^dag") {
    g.name = name.substr(0, name.size() - 4);
  } else {
    g.name = name + "^dag";
  }
  return g;
}

Matrix pauli(int k) {
  switch (k) {
    case 0: return Matrix::Identity(2, 2);
    case 1: return m2(0, 1, 1, 0);
    case 2: return m2(0, -kI, kI, 0);
    case 3: return m2(1, 0, 0, -1);
    default: throw Error(ErrorKind::kInvalidArgument, "Pauli index must be 0..3");
  }
}

Gate phase_gate(double phi) {
  if (!std::isfinite(phi)) throw Error(ErrorKind::kInvalidArgument, "non-finite phase");
  return {"P(" + format_double(phi) + ")", 1, m2(1, 0, 0, std::polar(1.0, phi)), {}};
}

Gate standard_gate(const std::string& name) {
  const double h = 1.0 / std::sqrt(2.0);
  if (name == "I") return {name, 1, Matrix::Identity(2, 2), {}};
  if (name == "X") return {name, 1, pauli(1), {}};
  if (name == "Y") return {name, 1, pauli(2), {}};
  if (name == "Z") return {name, 1, pauli(3), {}};
  if (name == "H") return {name, 1, m2(h, h, h, -h), {}};
  if (name == "T") return {name, 1, m2(1, 0, 0, std::polar(1.0, kPi / 4)), {}};
  if (name == "TDG") return {name, 1, m2(1, 0, 0, std::polar(1.0, -kPi / 4)), {}};
  if (name == "S") return {name, 1, m2(1, 0, 0, kI), {}};
  if (name == "SDG") return {name, 1, m2(1, 0, 0, -kI), {}};
  if (name == "CNOT") return {name, 2, permutation_matrix({0, 1, 3, 2}), {}};
  if (name == "CZ") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return {name, 2, m, {}};
  }
  if (name == "SWAP") return {name, 2, permutation_matrix({0, 2, 1, 3}), {}};
  if (name == "TOFFOLI") return {name, 3, permutation_matrix({0, 1, 2, 3, 4, 5, 7, 6}), {}};
  if (name.rfind("P(", 0) == 0) {
    Gate g = phase_gate(parse_args(name, 1)[0]);
    g.name = name;
    return g;
  }
  if (name.rfind("Rn(", 0) == 0) {
    const auto a = parse_args(name, 4);
    Gate g = rotation({{a[0], a[1], a[2]}, a[3]});
    g.name = name;
    return g;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown gate: " + name);
}

Gate custom_gate(const std::string& name, const Matrix& u, double tol) {
  require_square(u, "gate matrix");
  const int arity = arity_of_size(u.rows());
  const Check c = is_unitary(u, tol);
  if (!c.ok) {
    std::ostringstream msg;
    msg << "gate " << name << " is not unitary (residual " << c.residual << ")";
    throw Error(ErrorKind::kNotUnitary, msg.str());
  }
  return {name, arity, u, {}};
}

Gate permutation_gate(const std::string& name, int arity, std::vector<std::uint64_t> perm) {
  if (arity < 1 || arity > 30 || perm.size() != (std::size_t{1} << arity)) {
    throw Error(ErrorKind::kDimensionMismatch, "permutation size must be 2^arity");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::uint64_t p : perm) {
    if (p >= perm.size() || seen[p]) {
      throw Error(ErrorKind::kInvalidArgument, "table is not a permutation");
    }
    seen[p] = true;
  }
  return {name, arity, Matrix(), std::move(perm)};
}

Gate rotation(const RotationSpec& spec) {
  const auto& n = spec.axis;
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!std::isfinite(len) || !std::isfinite(spec.angle)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite rotation parameters");
  }
  if (len < 1e-12) throw Error(ErrorKind::kInvalidArgument, "rotation axis is zero");
  if (std::abs(len - 1.0) > 1e-6) {
    throw Error(ErrorKind::kInvalidArgument, "rotation axis is not a unit vector");
  }
  const double c = std::cos(spec.angle / 2), s = std::sin(spec.angle / 2);
  const Matrix ns = (n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3)) / len;
  const Matrix m = c * Matrix::Identity(2, 2) - kI * s * ns;
  std::ostringstream name;
  name.precision(17);
  name << "Rn(" << n[0] / len << "," << n[1] / len << "," << n[2] / len << "," << spec.angle << ")";
  return {name.str(), 1, m, {}};
}

Matrix rz(double theta) {
  return m2(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
}

Matrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return m2(c, -s, s, c);
}

ZyzAngles zyz_decompose(const Matrix& u, double tol) {
  require_square(u, "single-qubit unitary");
  if (u.rows() != 2) throw Error(ErrorKind::kDimensionMismatch, "expected a 2x2 unitary");
  if (!is_unitary(u, tol).ok) throw Error(ErrorKind::kNotUnitary, "input is not unitary");
  ZyzAngles z;
  z.alpha = std::arg(u.determinant()) / 2;
  const Matrix v = u * std::polar(1.0, -z.alpha);
  const cplx a = v(0, 0), b = v(1, 0);
  z.gamma = 2 * std::atan2(std::abs(b), std::abs(a));
  // a = e^{-i(beta+delta)/2} cos, b = e^{i(beta-delta)/2} sin.
  const double sum = std::abs(a) > 1e-12 ? -2 * std::arg(a) : 0.0;
  const double diff = std::abs(b) > 1e-12 ? 2 * std::arg(b) : 0.0;
  z.beta = (sum + diff) / 2;
  z.delta = (sum - diff) / 2;
  return z;
}

AbcDecomposition abc_decompose(const Matrix& u, double tol) {
  const ZyzAngles z = zyz_decompose(u, tol);
  AbcDecomposition out;
  out.alpha = z.alpha;
  out.a = rz(z.beta) * ry(z.gamma / 2);
  out.b = ry(-z.gamma / 2) * rz(-(z.delta + z.beta) / 2);
  out.c = rz((z.delta - z.beta) / 2);
  return out;
}

AxisAngle rotation_of(const Matrix& u) {
  require_square(u, "single-qubit unitary");
  if (u.rows() != 2) throw Error(ErrorKind::kDimensionMismatch, "expected a 2x2 unitary");
  AxisAngle out;
  out.phase = std::arg(u.determinant()) / 2;
  Matrix v = u * std::polar(1.0, -out.phase);
  double c = v.trace().real() / 2;
  std::array<double, 3> sn{};
  for (int k = 0; k < 3; ++k) sn[k] = ((kI / 2.0) * (v * pauli(k + 1)).trace()).real();
  if (c < 0) {
    c = -c;
    for (double& x : sn) x = -x;
    out.phase += kPi;
  }
  const double s = std::sqrt(sn[0] * sn[0] + sn[1] * sn[1] + sn[2] * sn[2]);
  out.angle = 2 * std::atan2(s, c);
  if (s > 1e-15) out.axis = {sn[0] / s, sn[1] / s, sn[2] / s};
  return out;
}

double approximation_error(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "operators have different shapes");
  }
  const Matrix d = u - v;
  Eigen::JacobiSVD<Matrix> s(d);
  return s.singularValues()(0);
}

namespace {

// Eigenphases of U^dag V sorted ascending in (-pi, pi].
std::vector<double> relative_phases(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "operators have different shapes");
  }
  Eigen::ComplexEigenSolver<Matrix> es(u.adjoint() * v, false);
  std::vector<double> ph;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) ph.push_back(std::arg(es.eigenvalues()(k)));
  std::sort(ph.begin(), ph.end());
  return ph;
}

// Smallest arc covering all phases: returns (arc length, arc midpoint).
std::pair<double, double> covering_arc(const std::vector<double>& ph) {
  const std::size_t n = ph.size();
  double best_gap = -1.0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = k + 1 < n ? ph[k + 1] : ph[0] + 2 * kPi;
    const double gap = next - ph[k];
    if (gap > best_gap) {
      best_gap = gap;
      start = (k + 1) % n;
    }
  }
  const double arc = std::max(0.0, 2 * kPi - best_gap);
  return {arc, ph[start] + arc / 2};
}

}  // namespace

double projective_error(const Matrix& u, const Matrix& v) {
  const auto [arc, mid] = covering_arc(relative_phases(u, v));
  return 2 * std::sin(std::min(arc, 2 * kPi) / 4);
}

double aligning_phase(const Matrix& u, const Matrix& v) {
  // U ~ e^{i phi} V when phi cancels the centre of the eigenphase arc.
  return -covering_arc(relative_phases(u, v)).second;
}

Matrix ht_word_value(const std::string& letters) {
  const Matrix h = standard_gate("H").matrix, t = standard_gate("T").matrix;
  Matrix out = Matrix::Identity(2, 2);
  for (char ch : letters) {
    if (ch == 'H') out = out * h;
    else if (ch == 'T') out = out * t;
    else throw Error(ErrorKind::kInvalidArgument, "H/T words use only the letters H and T");
  }
  return out;
}

namespace {

// Grid cell of the SU(2) representative, sign fixed so the quaternion is canonical.
std::uint64_t su2_cell(const Matrix& u) {
  const AxisAngle r = rotation_of(u);
  const double c = std::cos(r.angle / 2), s = std::sin(r.angle / 2);
  double q[4] = {c, s * r.axis[0], s * r.axis[1], s * r.axis[2]};
  if (std::abs(q[0]) < 1e-12) {
    for (int k = 1; k < 4; ++k) {
      if (std::abs(q[k]) > 1e-12) {
        if (q[k] < 0) for (double& x : q) x = -x;
        break;
      }
    }
  }
  constexpr double kCell = 0.04;
  std::uint64_t key = 0;
  for (double x : q) {
    const auto bin = static_cast<std::int64_t>(std::floor((x + 1.0) / kCell + 0.5));
    key = key * 64 + static_cast<std::uint64_t>(std::clamp<std::int64_t>(bin, 0, 63));
  }
  return key;
}

}  // namespace

HtWord ht_approximate(const Matrix& target, double epsilon, int max_len) {
  require_square(target, "target");
  if (target.rows() != 2) throw Error(ErrorKind::kDimensionMismatch, "target must be 2x2");
  if (!(epsilon > 0.0)) throw Error(ErrorKind::kInvalidArgument, "epsilon must be positive");
  if (max_len < 0) throw Error(ErrorKind::kInvalidArgument, "max_len must be nonnegative");
  const Matrix h = standard_gate("H").matrix, t = standard_gate("T").matrix;

  struct Node {
    std::string letters;
    Matrix value;
  };
  std::deque<Node> queue{{"", Matrix::Identity(2, 2)}};
  std::unordered_set<std::uint64_t> visited{su2_cell(queue.front().value)};
  HtWord best;
  best.error = INFINITY;
  std::size_t explored = 0;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++explored;
    const double err = projective_error(target, node.value);
    if (err < best.error) {
      best.letters = node.letters;
      best.value = node.value;
      best.error = err;
    }
    if (err <= epsilon) break;
    if (static_cast<int>(node.letters.size()) >= max_len) continue;
    for (char ch : {'H', 'T'}) {
      Matrix next = node.value * (ch == 'H' ? h : t);
      if (!visited.insert(su2_cell(next)).second) continue;
      queue.push_back({node.letters + ch, std::move(next)});
    }
  }
  best.found = best.error <= epsilon;
  best.phase = aligning_phase(target, best.value);
  best.explored = explored;
  return best;
}

}  // namespace qitk
