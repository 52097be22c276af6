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

#include "qitk/synthesis.hpp"

#include <array>
#include <cmath>

namespace qitk {

Matrix TwoLevelUnitary::embedded() const {
  if (i < 0 || j <= i || j >= dim) throw Error(ErrorKind::kInvalidArgument, "two-level indices must satisfy 0 <= i < j < dim");
  Matrix m = Matrix::Identity(dim, dim);
  m(i, i) = block(0, 0);
  m(i, j) = block(0, 1);
  m(j, i) = block(1, 0);
  m(j, j) = block(1, 1);
  return m;
}

std::vector<TwoLevelUnitary> two_level_decompose(const Matrix& u, double tol) {
  require_square(u, "unitary");
  const Check c = is_unitary(u, tol);
  if (!c.ok) throw Error(ErrorKind::kNotUnitary, "two-level decomposition needs a unitary input");
  const int d = static_cast<int>(u.rows());
  if (d < 2) throw Error(ErrorKind::kDimensionMismatch, "dimension must be at least 2");

  // Left-multiply by steps until only the trailing 2x2 block is nontrivial:
  // S_m ... S_1 U = W, hence U = S_1^dag ... S_m^dag W.
  Matrix w = u;
  std::vector<TwoLevelUnitary> factors;
  for (int k = 0; k + 2 < d; ++k) {
    for (int i = k + 1; i < d; ++i) {
      const cplx a = w(k, k), b = w(i, k);
      const double norm = std::hypot(std::abs(a), std::abs(b));
      if (norm < 1e-300) continue;
      Matrix step(2, 2);
      step << std::conj(a) / norm, std::conj(b) / norm, b / norm, -a / norm;
      const Eigen::RowVectorXcd rk = w.row(k), ri = w.row(i);
      w.row(k) = step(0, 0) * rk + step(0, 1) * ri;
      w.row(i) = step(1, 0) * rk + step(1, 1) * ri;
      factors.push_back({d, k, i, step.adjoint()});
    }
  }
  Matrix last(2, 2);
  last << w(d - 2, d - 2), w(d - 2, d - 1), w(d - 1, d - 2), w(d - 1, d - 1);
  factors.push_back({d, d - 2, d - 1, last});
  return factors;
}

Matrix multiply_factors(const std::vector<TwoLevelUnitary>& factors, int dim) {
  Matrix out = Matrix::Identity(dim, dim);
  for (const TwoLevelUnitary& f : factors) {
    if (f.dim != dim) throw Error(ErrorKind::kDimensionMismatch, "factor dimension mismatch");
    out = out * f.embedded();
  }
  return out;
}

std::vector<std::uint64_t> gray_path(std::uint64_t s, std::uint64_t t, int n) {
  if (n < 1 || n > 62) throw Error(ErrorKind::kInvalidArgument, "register width out of range");
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (s >= limit || t >= limit) throw Error(ErrorKind::kInvalidArgument, "basis label out of range");
  std::vector<std::uint64_t> path{s};
  std::uint64_t cur = s;
  // Bits flip from the last wire (least significant) towards wire 0.
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    if ((cur ^ t) & bit) {
      cur ^= bit;
      path.push_back(cur);
    }
  }
  return path;
}

namespace {

int wire_of_bit(std::uint64_t diff, int n) {
  for (int w = 0; w < n; ++w)
    if (diff == (std::uint64_t{1} << (n - 1 - w))) return w;
  throw Error(ErrorKind::kInvalidArgument, "Gray step flips more than one bit");
}

std::vector<Control> controls_except(std::uint64_t state, int n, int skip) {
  std::vector<Control> cs;
  for (int w = 0; w < n; ++w) {
    if (w == skip) continue;
    cs.push_back({w, static_cast<int>((state >> (n - 1 - w)) & 1)});
  }
  return cs;
}

}  // namespace

Circuit gray_synthesize(const TwoLevelUnitary& t, int n) {
  if (n < 1 || n > 20 || t.dim != (1 << n)) {
    throw Error(ErrorKind::kDimensionMismatch, "two-level dimension must equal 2^n");
  }
  const std::vector<std::uint64_t> path =
      gray_path(static_cast<std::uint64_t>(t.i), static_cast<std::uint64_t>(t.j), n);
  const std::size_t m = path.size() - 1;
  Circuit c(n);
  std::vector<std::pair<int, std::vector<Control>>> routing;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const int w = wire_of_bit(path[k] ^ path[k + 1], n);
    routing.emplace_back(w, controls_except(path[k], n, w));
  }
  for (const auto& [w, cs] : routing) c.gate("X", {w}, cs);

  const std::uint64_t before = path[m - 1];
  const int w = wire_of_bit(before ^ path[m], n);
  Matrix v = t.block;
  // The routed image of |i> must sit on |0> of the target wire.
  if ((before >> (n - 1 - w)) & 1) {
    const Matrix x = pauli(1);
    v = x * v * x;
  }
  c.gate(custom_gate("V", v, 1e-8), {w}, controls_except(before, n, w));
  for (auto it = routing.rbegin(); it != routing.rend(); ++it) c.gate("X", {it->first}, it->second);
  return c;
}

Circuit controlled_u_circuit(const Matrix& u) {
  const AbcDecomposition abc = abc_decompose(u);
  Circuit c(2);
  c.gate(custom_gate("C", abc.c, 1e-8), {1});
  c.gate("X", {1}, {{0, 1}});
  c.gate(custom_gate("B", abc.b, 1e-8), {1});
  c.gate("X", {1}, {{0, 1}});
  c.gate(custom_gate("A", abc.a, 1e-8), {1});
  c.gate(phase_gate(abc.alpha), {0});
  return c;
}

Circuit toffoli_circuit() {
  Circuit c(3);
  auto cx = [&c](int ctrl, int tgt) { c.gate("X", {tgt}, {{ctrl, 1}}); };
  c.gate("H", {2});
  cx(1, 2);
  c.gate("TDG", {2});
  cx(0, 2);
  c.gate("T", {2});
  cx(1, 2);
  c.gate("TDG", {2});
  cx(0, 2);
  c.gate("TDG", {1});
  c.gate("T", {2});
  cx(0, 1);
  c.gate("H", {2});
  c.gate("TDG", {1});
  cx(0, 1);
  c.gate("T", {0});
  c.gate("S", {1});
  return c;
}

Circuit multi_controlled_with_ancillas(const Matrix& u, int n_controls) {
  if (n_controls < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one control");
  const Gate g = custom_gate("U", u);
  if (g.arity != 1) throw Error(ErrorKind::kDimensionMismatch, "target unitary must be 2x2");
  const int n = n_controls;
  const int target = 2 * n - 1;
  Circuit c(2 * n);
  if (n == 1) {
    c.gate(g, {target}, {{0, 1}});
    return c;
  }
  // Work qubit n+k holds c_0 AND ... AND c_{k+1}.
  std::vector<std::array<int, 3>> ladder;
  ladder.push_back({0, 1, n});
  for (int k = 1; k <= n - 2; ++k) ladder.push_back({k + 1, n + k - 1, n + k});
  for (const auto& t : ladder) c.gate("TOFFOLI", {t[0], t[1], t[2]});
  c.gate(g, {target}, {{2 * n - 2, 1}});
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) c.gate("TOFFOLI", {(*it)[0], (*it)[1], (*it)[2]});
  return c;
}

}  // namespace qitk
