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

#include "qitk/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace qitk {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

BooleanOracle BooleanOracle::make(int n_in, int n_out, std::vector<std::uint64_t> table) {
  if (n_in < 1 || n_out < 1 || n_in + n_out > 24) {
    throw Error(ErrorKind::kInvalidArgument, "oracle widths out of range");
  }
  if (table.size() != (std::size_t{1} << n_in)) {
    throw Error(ErrorKind::kDimensionMismatch, "truth table length must be 2^n_in");
  }
  for (std::uint64_t v : table) {
    if (v >= (std::uint64_t{1} << n_out)) {
      throw Error(ErrorKind::kInvalidArgument, "truth table value exceeds output width");
    }
  }
  return {n_in, n_out, std::move(table)};
}

Gate BooleanOracle::unitary() const {
  const int width = n_in + n_out;
  std::vector<std::uint64_t> perm(std::size_t{1} << width);
  for (std::uint64_t x = 0; x < table.size(); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n_out); ++y)
      perm[(x << n_out) | y] = (x << n_out) | (y ^ table[x]);
  return permutation_gate(kOracleGateName, width, std::move(perm));
}

int oracle_applications(const Circuit& c) {
  return static_cast<int>(std::count_if(c.ops().begin(), c.ops().end(), [](const Op& op) {
    return op.kind != Op::Kind::kMeasure && op.gate.name == kOracleGateName;
  }));
}

Circuit deutsch_circuit(const BooleanOracle& f) {
  if (f.n_in != 1 || f.n_out != 1) {
    throw Error(ErrorKind::kInvalidArgument, "Deutsch needs a one-bit to one-bit function");
  }
  Circuit c(2);
  c.gate("X", {1});
  c.gate("H", {0});
  c.gate("H", {1});
  c.gate(f.unitary(), {0, 1});
  c.gate("H", {0});
  return c;
}

DeutschReport deutsch(const BooleanOracle& f) {
  const Circuit c = deutsch_circuit(f);
  const SimResult r = simulate(c, StateVector::qubits(2, 0), 0);
  DeutschReport out;
  out.p_one = marginal_probabilities(r.state.amplitudes(), 2, {0})[1];
  out.result = out.p_one > 0.5 ? DeutschResult::kBalanced : DeutschResult::kConstant;
  out.oracle_calls = oracle_applications(c);
  return out;
}

std::optional<std::uint64_t> simon_secret(const BooleanOracle& f) {
  if (f.n_in != f.n_out) return std::nullopt;
  const std::uint64_t size = f.table.size();
  // s is forced by the first collision with x = 0.
  for (std::uint64_t s = 1; s < size; ++s) {
    if (f.table[s] != f.table[0]) continue;
    for (std::uint64_t x = 0; x < size; ++x) {
      for (std::uint64_t y = 0; y < size; ++y) {
        const bool same = f.table[x] == f.table[y];
        const bool paired = (y == x) || (y == (x ^ s));
        if (same != paired) return std::nullopt;
      }
    }
    return s;
  }
  return std::nullopt;
}

Circuit simon_circuit(const BooleanOracle& f) {
  const int n = f.n_in;
  if (f.n_out != n) throw Error(ErrorKind::kInvalidArgument, "Simon needs an n-to-n function");
  Circuit c(2 * n);
  std::vector<int> input(n), all(2 * n);
  for (int w = 0; w < 2 * n; ++w) all[w] = w;
  for (int w = 0; w < n; ++w) input[w] = w;
  for (int w : input) c.gate("H", {w});
  c.gate(f.unitary(), all);
  for (int w : input) c.gate("H", {w});
  c.measure(input);
  return c;
}

std::uint64_t simon_sample(const Circuit& c, int n, std::uint64_t seed) {
  const SimResult r = simulate(c, StateVector::qubits(c.n_qubits(), 0), seed);
  std::uint64_t z = 0;
  for (int b = 0; b < n; ++b) z = (z << 1) | static_cast<std::uint64_t>(r.record[b]);
  return z;
}

namespace {

// Row-reduced basis keyed by pivot bit.
std::vector<std::uint64_t> gf2_reduce(const std::vector<std::uint64_t>& rows, int n) {
  std::vector<std::uint64_t> basis(n, 0);
  for (std::uint64_t r : rows) {
    for (int b = n - 1; b >= 0 && r; --b) {
      if (!((r >> b) & 1)) continue;
      if (basis[b] == 0) {
        basis[b] = r;
        break;
      }
      r ^= basis[b];
    }
  }
  return basis;
}

}  // namespace

int gf2_rank(const std::vector<std::uint64_t>& rows, int n) {
  const auto basis = gf2_reduce(rows, n);
  return static_cast<int>(std::count_if(basis.begin(), basis.end(), [](std::uint64_t r) { return r != 0; }));
}

std::optional<std::uint64_t> gf2_null_vector(const std::vector<std::uint64_t>& rows, int n) {
  if (n < 1 || n > 63) throw Error(ErrorKind::kInvalidArgument, "bit width out of range");
  std::vector<std::uint64_t> basis = gf2_reduce(rows, n);
  if (gf2_rank(rows, n) != n - 1) return std::nullopt;
  // Full reduction so each pivot column appears in exactly one row.
  for (int b = 0; b < n; ++b) {
    if (!basis[b]) continue;
    for (int c = 0; c < n; ++c)
      if (c != b && basis[c] && ((basis[c] >> b) & 1)) basis[c] ^= basis[b];
  }
  int free_bit = 0;
  while (basis[free_bit]) ++free_bit;
  std::uint64_t s = std::uint64_t{1} << free_bit;
  for (int b = 0; b < n; ++b)
    if (basis[b] && ((basis[b] >> free_bit) & 1)) s |= std::uint64_t{1} << b;
  return s;
}

SimonReport simon(const BooleanOracle& f, std::uint64_t seed, int max_calls) {
  if (!simon_secret(f)) {
    throw Error(ErrorKind::kPromiseViolated, "function does not satisfy the Simon promise");
  }
  const int n = f.n_in;
  const Circuit c = simon_circuit(f);
  std::mt19937_64 seeds(seed);
  SimonReport out;
  while (true) {
    if (auto s = gf2_null_vector(out.samples, n)) {
      out.s = *s;
      return out;
    }
    if (out.oracle_calls >= max_calls) {
      throw Error(ErrorKind::kExhausted, "no n-1 independent samples within the call budget");
    }
    out.samples.push_back(simon_sample(c, n, seeds()));
    ++out.oracle_calls;
  }
}

Circuit phase_estimation_circuit(const PhaseEstimationInstance& inst) {
  const Gate base = custom_gate("U", inst.unitary, 1e-8);
  const int n = inst.n_bits, m = base.arity;
  if (n < 1 || n + m > 20) throw Error(ErrorKind::kInvalidArgument, "counting register width out of range");
  Circuit c(n + m);
  std::vector<int> target(m);
  for (int k = 0; k < m; ++k) target[k] = n + k;
  for (int w = 0; w < n; ++w) c.gate("H", {w});
  // Wire w carries weight 2^{n-1-w}; powers by repeated squaring.
  std::vector<Matrix> powers{inst.unitary};
  for (int k = 1; k < n; ++k) powers.push_back(powers.back() * powers.back());
  for (int w = 0; w < n; ++w) {
    const int k = n - 1 - w;
    c.gate(custom_gate("U^" + std::to_string(std::uint64_t{1} << k), powers[k], 1e-6), target, {{w, 1}});
  }
  c.append(qft_circuit(n).inverse().embedded(n + m, 0));
  return c;
}

PhaseReport phase_estimate(const PhaseEstimationInstance& inst, double tol) {
  require_square(inst.unitary, "unitary");
  if (inst.unitary.rows() != inst.eigenvector.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "eigenvector does not match the unitary");
  }
  const Vector& u = inst.eigenvector.amplitudes();
  const cplx lambda = u.dot(inst.unitary * u);
  const double residual = (inst.unitary * u - lambda * u).norm();
  if (residual > std::max(tol, 1e-12)) {
    throw Error(ErrorKind::kPromiseViolated, "state is not an eigenvector of the unitary");
  }
  const Circuit c = phase_estimation_circuit(inst);
  const int n = inst.n_bits;
  const Vector input = kron(StateVector::qubits(n, 0).amplitudes(), u);
  const SimResult r = simulate(c, StateVector::normalized(Dims(c.n_qubits(), 2), input), 0);
  std::vector<int> counting(n);
  for (int w = 0; w < n; ++w) counting[w] = w;
  PhaseReport out;
  out.distribution = marginal_probabilities(r.state.amplitudes(), c.n_qubits(), counting);
  out.best_index = static_cast<int>(std::max_element(out.distribution.begin(), out.distribution.end()) -
                                    out.distribution.begin());
  out.estimate = std::ldexp(static_cast<double>(out.best_index), -n);
  double phi = std::arg(lambda) / (2 * kPi);
  if (phi < 0) phi += 1.0;
  if (phi >= 1.0) phi -= 1.0;
  out.phase = phi;
  return out;
}

double phase_probability_closed_form(double phi, int n, int j) {
  const double big = std::ldexp(1.0, n);
  const double delta = phi - j / big;
  const double den = big * std::sin(kPi * delta);
  if (std::abs(den) < 1e-14) return 1.0;
  const double r = std::sin(big * kPi * delta) / den;
  return r * r;
}

int nearest_phase_index(double phi, int n) {
  const double big = std::ldexp(1.0, n);
  auto j = static_cast<std::int64_t>(std::llround(phi * big));
  j %= static_cast<std::int64_t>(big);
  if (j < 0) j += static_cast<std::int64_t>(big);
  return static_cast<int>(j);
}

GroverInstance GroverInstance::make(int n, std::vector<std::uint64_t> solutions) {
  if (n < 1 || n > 16) throw Error(ErrorKind::kInvalidArgument, "Grover width must be 1..16");
  const std::set<std::uint64_t> unique(solutions.begin(), solutions.end());
  if (unique.size() != solutions.size()) throw Error(ErrorKind::kInvalidArgument, "duplicate solution");
  for (std::uint64_t s : solutions) {
    if (s >= (std::uint64_t{1} << n)) throw Error(ErrorKind::kInvalidArgument, "solution outside the search space");
  }
  if (solutions.empty() || solutions.size() >= (std::size_t{1} << n)) {
    throw Error(ErrorKind::kInvalidArgument, "need 1 <= M < N solutions");
  }
  std::sort(solutions.begin(), solutions.end());
  return {n, std::move(solutions)};
}

double grover_theta(std::uint64_t N, std::uint64_t M) {
  if (M < 1 || M >= N) throw Error(ErrorKind::kInvalidArgument, "need 1 <= M < N");
  return 2 * std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
}

int grover_k0(std::uint64_t N, std::uint64_t M) {
  const double bound = kPi / (2 * grover_theta(N, M)) - 0.5;
  // Smallest k >= 0 with k + 1/2 >= bound; slack absorbs rounding at exact ties.
  return static_cast<int>(std::max(0.0, std::ceil(bound - 0.5 - 1e-12)));
}

double grover_success(const GroverInstance& inst, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "iteration count must be nonnegative");
  const double s = std::sin((2 * k + 1) * grover_theta(inst.N(), inst.M()) / 2);
  return s * s;
}

namespace {

BooleanOracle grover_oracle(const GroverInstance& inst) {
  std::vector<std::uint64_t> table(inst.N(), 0);
  for (std::uint64_t s : inst.solutions) table[s] = 1;
  return BooleanOracle::make(inst.n, 1, table);
}

Circuit grover_preparation(int n) {
  Circuit c(n + 1);
  c.gate("X", {n});
  c.gate("H", {n});
  for (int w = 0; w < n; ++w) c.gate("H", {w});
  return c;
}

Circuit grover_iteration(const GroverInstance& inst) {
  const int n = inst.n;
  Circuit c(n + 1);
  std::vector<int> all(n + 1);
  for (int w = 0; w <= n; ++w) all[w] = w;
  c.gate(grover_oracle(inst).unitary(), all);
  for (int w = 0; w < n; ++w) c.gate("H", {w});
  for (int w = 0; w < n; ++w) c.gate("X", {w});
  std::vector<Control> ctrl;
  for (int w = 0; w + 1 < n; ++w) ctrl.push_back({w, 1});
  c.gate("Z", {n - 1}, ctrl);
  for (int w = 0; w < n; ++w) c.gate("X", {w});
  for (int w = 0; w < n; ++w) c.gate("H", {w});
  // X^n C Z X^n = 1 - 2|0><0|; the global sign gives 2|0><0| - 1.
  c.gate(custom_gate("GPHASE", -Matrix::Identity(2, 2)), {0});
  return c;
}

std::vector<double> search_register(const Vector& psi, int n) {
  std::vector<int> wires(n);
  for (int w = 0; w < n; ++w) wires[w] = w;
  return marginal_probabilities(psi, n + 1, wires);
}

}  // namespace

Circuit grover_circuit(const GroverInstance& inst, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "iteration count must be nonnegative");
  Circuit c = grover_preparation(inst.n);
  const Circuit g = grover_iteration(inst);
  for (int i = 0; i < k; ++i) c.append(g);
  return c;
}

std::vector<double> grover(const GroverInstance& inst, int k) {
  const Circuit c = grover_circuit(inst, k);
  const SimResult r = simulate(c, StateVector::qubits(inst.n + 1, 0), 0);
  return search_register(r.state.amplitudes(), inst.n);
}

std::vector<double> grover_success_series(const GroverInstance& inst, int k_max) {
  if (k_max < 0) throw Error(ErrorKind::kInvalidArgument, "k_max must be nonnegative");
  const int n = inst.n;
  Vector psi = StateVector::qubits(n + 1, 0).amplitudes();
  const Circuit prep = grover_preparation(n);
  for (const Op& op : prep.ops()) apply_gate_op(psi, n + 1, op);
  const Circuit g = grover_iteration(inst);
  std::vector<double> out;
  for (int k = 0; k <= k_max; ++k) {
    const std::vector<double> p = search_register(psi, n);
    double success = 0.0;
    for (std::uint64_t s : inst.solutions) success += p[s];
    out.push_back(success);
    if (k < k_max)
      for (const Op& op : g.ops()) apply_gate_op(psi, n + 1, op);
  }
  return out;
}

double grover_hamiltonian(const GroverInstance& inst, double t) {
  const double x = std::sqrt(static_cast<double>(inst.M()) / static_cast<double>(inst.N()));
  const double c = std::sqrt(1.0 - x * x);
  // Basis {|alpha>, |beta>}; |psi> = c|alpha> + x|beta>.
  Matrix h(2, 2);
  h << c * c, c * x, c * x, 1.0 + x * x;
  const HermitianEig e = hermitian_eig(h);
  const Vector phases = (e.eigenvalues.cast<cplx>() * cplx(0.0, -t)).array().exp();
  const Matrix u = e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
  Vector psi(2);
  psi << c, x;
  return std::norm((u * psi)(1));
}

double grover_hamiltonian_dense(const GroverInstance& inst, double t) {
  const auto N = static_cast<Eigen::Index>(inst.N());
  Vector psi = Vector::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
  Vector beta = Vector::Zero(N);
  for (std::uint64_t s : inst.solutions) beta(static_cast<Eigen::Index>(s)) = 1.0;
  beta /= beta.norm();
  const Matrix h = beta * beta.adjoint() + psi * psi.adjoint();
  const HermitianEig e = hermitian_eig(h);
  const Vector phases = (e.eigenvalues.cast<cplx>() * cplx(0.0, -t)).array().exp();
  const Matrix u = e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
  return std::norm(beta.dot(u * psi));
}

}  // namespace qitk
